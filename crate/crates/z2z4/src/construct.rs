//! Code families: cyclic simplex and Hamming codes, the perfect Z2Z4 codes
//! cut out by syndrome columns, and the parity extension.

use crate::code::{CodeType, MixedMatrix, Z2Z4Code};
use crate::vector::MixedVector;
use crate::{Error, Result};

/// Exponent k of the primitive trinomial x^r + x^k + 1 driving the LFSR.
fn lfsr_tap(r: usize) -> Result<usize> {
    Ok(match r {
        2 | 3 | 4 | 6 => 1,
        5 => 2,
        _ => return Err(Error::ParamRange(format!("r={r} outside 2..=6"))),
    })
}

/// One period of the m-sequence of length 2^r - 1, seeded with 1, 0, ..., 0.
fn m_sequence(r: usize) -> Result<Vec<u8>> {
    let k = lfsr_tap(r)?;
    let n = (1usize << r) - 1;
    let mut s = vec![0u8; n];
    s[0] = 1;
    for i in r..n {
        s[i] = s[i - r] ^ s[i - r + k];
    }
    Ok(s)
}

/// The binary cyclic simplex code of length 2^r - 1 and dimension r: the
/// m-sequence and its first r - 1 shifts. Every nonzero codeword is a shift
/// of the m-sequence and has weight 2^(r-1).
pub fn simplex_cyclic(r: usize) -> Result<Z2Z4Code> {
    let seq = m_sequence(r)?;
    let n = seq.len();
    let mut m = MixedMatrix::new(n, 0);
    let mut row = MixedVector::from_symbols(&seq, &[])?;
    for _ in 0..r {
        m.push(row.clone())?;
        row = row.shift();
    }
    Z2Z4Code::from_generators(m)
}

/// The binary cyclic Hamming code of length 2^r - 1, the dual of the
/// simplex code.
pub fn hamming_cyclic(r: usize) -> Result<Z2Z4Code> {
    simplex_cyclic(r)?.dual()
}

/// The cyclic perfect code of binary length 15 with alpha = 3, beta = 6,
/// presented by the shift-closed parity check rows.
pub fn build_cstar() -> Z2Z4Code {
    let rows = ["110|112310", "011|011231"]
        .map(|s| MixedVector::parse_literal(s).unwrap());
    let check = MixedMatrix::from_rows(3, 6, rows.to_vec()).unwrap();
    Z2Z4Code::from_parity_check(check).unwrap()
}

fn check_params(r: usize, t: usize) -> Result<()> {
    if !(2..=6).contains(&r) || t < r || t > 2 * r {
        return Err(Error::ParamRange(format!(
            "(r, t) = ({r}, {t}) needs 2 <= r <= 6 and r <= t <= 2r"
        )));
    }
    Ok(())
}

/// The type of the perfect code with parameters (r, t):
/// `(2^r - 1, 2^(t-1) - 2^(r-1); alpha - 2r + t, beta + r - t; gamma)`.
pub fn perfect_code_type(r: usize, t: usize) -> Result<CodeType> {
    check_params(r, t)?;
    let alpha = (1usize << r) - 1;
    let beta = (1usize << (t - 1)) - (1usize << (r - 1));
    let gamma = alpha + t - 2 * r;
    let delta = beta + r - t;
    CodeType::new(alpha, beta, gamma, delta, gamma)
}

fn decode_syndrome(enc: usize, gbar: usize, dbar: usize) -> (Vec<u8>, Vec<u8>) {
    let bin: Vec<u8> = (0..gbar)
        .map(|i| ((enc >> (2 * dbar + gbar - 1 - i)) & 1) as u8)
        .collect();
    let quat: Vec<u8> = (0..dbar)
        .map(|j| ((enc >> (2 * (dbar - 1 - j))) & 3) as u8)
        .collect();
    (bin, quat)
}

fn encode_syndrome(bin: &[u8], quat: &[u8]) -> usize {
    let mut enc = 0usize;
    for &b in bin {
        enc = (enc << 1) | b as usize;
    }
    for &q in quat {
        enc = (enc << 2) | q as usize;
    }
    enc
}

/// The parity check matrix of the perfect code with parameters (r, t):
/// 2r - t rows of order 2 above t - r rows of order 4. The binary columns
/// run through the nonzero vectors of Z2^r ascending (first row holds the
/// most significant bit); the quaternary columns take one representative of
/// every +-pair of order-4 syndromes, ascending by value, with the order-2
/// row entries doubled.
pub fn perfect_check_matrix(r: usize, t: usize) -> Result<MixedMatrix> {
    check_params(r, t)?;
    let gbar = 2 * r - t;
    let dbar = t - r;
    let alpha = (1usize << r) - 1;

    let mut reps: Vec<(Vec<u8>, Vec<u8>)> = Vec::new();
    for enc in 0..1usize << (gbar + 2 * dbar) {
        let (bin, quat) = decode_syndrome(enc, gbar, dbar);
        if !quat.iter().any(|&q| q & 1 == 1) {
            continue; // order at most 2
        }
        let neg: Vec<u8> = quat.iter().map(|&q| q.wrapping_neg() & 3).collect();
        if encode_syndrome(&bin, &neg) < enc {
            continue; // the other half of the +-pair was kept
        }
        reps.push((bin, quat));
    }
    let beta = reps.len();
    debug_assert_eq!(beta, (1usize << (t - 1)) - (1usize << (r - 1)));

    let mut m = MixedMatrix::new(alpha, beta);
    for row in 0..r {
        let mut g = MixedVector::zero(alpha, beta);
        for c in 1..=alpha {
            g.set_bin(c - 1, ((c >> (r - 1 - row)) & 1) as u8);
        }
        for (l, (bin, quat)) in reps.iter().enumerate() {
            let q = if row < gbar {
                2 * bin[row]
            } else {
                quat[row - gbar]
            };
            g.set_quat(l, q);
        }
        m.push(g)?;
    }
    Ok(m)
}

/// The perfect code with parameters (r, t): binary length 2^t - 1, one
/// codeword in every radius-1 ball. t = r gives the binary Hamming code;
/// t = 2r gives the pure head of the family with beta = 2^(r-1) * alpha.
pub fn build_perfect(r: usize, t: usize) -> Result<Z2Z4Code> {
    Z2Z4Code::from_parity_check(perfect_check_matrix(r, t)?)
}

/// The dual of the perfect code with parameters (r, t): the span of the
/// check rows, with 2^(2r - t + 2(t - r)) = 2^t codewords.
pub fn build_dual_perfect(r: usize, t: usize) -> Result<Z2Z4Code> {
    build_perfect(r, t)?.dual()
}

/// Appends an overall parity coordinate to the binary part: each codeword v
/// gains the bit weight(v) mod 2. Parity is additive, so extending the
/// generators generates the extended code.
pub fn extend(code: &Z2Z4Code) -> Result<Z2Z4Code> {
    let (alpha, beta) = (code.alpha(), code.beta());
    let mut m = MixedMatrix::new(alpha + 1, beta);
    for g in code.reduced().all_rows() {
        let mut bin: Vec<u8> = (0..alpha).map(|i| g.bin_symbol(i)).collect();
        bin.push((g.weight() & 1) as u8);
        let quat: Vec<u8> = (0..beta).map(|j| g.quat_symbol(j)).collect();
        m.push(MixedVector::from_symbols(&bin, &quat)?)?;
    }
    Z2Z4Code::from_generators(m)
}

/// A vector of shape (alpha, 2^(r-1) * alpha) read as its binary part plus
/// 2^(r-1) quaternary blocks of length alpha each.
pub struct BlockView<'a> {
    v: &'a MixedVector,
    alpha: usize,
    blocks: usize,
}

impl<'a> BlockView<'a> {
    pub fn new(v: &'a MixedVector, r: usize) -> Result<Self> {
        let alpha = (1usize << r) - 1;
        let blocks = 1usize << (r - 1);
        if r < 2 || v.alpha() != alpha || v.beta() != blocks * alpha {
            return Err(Error::ParamRange(format!(
                "shape ({}, {}) does not split into 2^{} blocks of {}",
                v.alpha(),
                v.beta(),
                r - 1,
                alpha
            )));
        }
        Ok(BlockView { v, alpha, blocks })
    }

    pub fn block_count(&self) -> usize {
        self.blocks
    }

    /// The k-th quaternary block (0-indexed).
    pub fn block(&self, k: usize) -> Vec<u8> {
        assert!(k < self.blocks);
        (0..self.alpha)
            .map(|l| self.v.quat_symbol(k * self.alpha + l))
            .collect()
    }

    /// Number of entries equal to 2 in block k.
    pub fn eta(&self, k: usize) -> usize {
        self.block(k).iter().filter(|&&q| q == 2).count()
    }

    /// Positions where blocks i and j hold {0, 2} in either order.
    pub fn n_set(&self, i: usize, j: usize) -> Vec<usize> {
        let (bi, bj) = (self.block(i), self.block(j));
        (0..self.alpha)
            .filter(|&l| {
                (bi[l] == 0 && bj[l] == 2) || (bi[l] == 2 && bj[l] == 0)
            })
            .collect()
    }
}
