//! Checks on codes: shift closure, cyclic arrangements, perfectness by two
//! independent routes, Gray-image linearity, the numeric audits behind the
//! classification at (3, 6), and the exhaustive closure search for
//! shift-closed duals.

use crate::code::{reduce, CodeType, MixedMatrix, Z2Z4Code};
use crate::construct::{build_cstar, perfect_code_type, simplex_cyclic};
use crate::exec;
use crate::report::{AuditReport, Verdict, Witness};
use crate::vector::{BinaryVector, MixedVector};
use crate::{Error, Result};
use std::collections::BTreeSet;
use std::time::Instant;

/// Arrangements with more candidates than this are sampled from the front
/// unless the caller raises the budget.
pub const DEFAULT_ARRANGEMENT_BUDGET: u64 = 1_000_000;

/// The sphere count enumerates the whole ambient space, so it is limited to
/// this many bits.
pub const SPHERE_MAX_BITS: usize = 24;

fn factorial_u64(n: usize) -> u64 {
    (1..=n as u64).product()
}

fn factorial_u128(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// The permutation of rank `k` in lexicographic order, as a pull table.
/// Rank 0 is the identity.
fn unrank_permutation(n: usize, mut k: u64) -> Vec<usize> {
    let mut avail: Vec<usize> = (0..n).collect();
    let mut out = Vec::with_capacity(n);
    for i in (1..=n).rev() {
        let f = factorial_u64(i - 1);
        let d = (k / f) as usize;
        k %= f;
        out.push(avail.remove(d));
    }
    out
}

/// A reordering of the coordinates: position `i` of the arranged vector
/// reads position `pi_x[i]` (binary part) or `pi_y[j]` (quaternary part)
/// of the original. Stored 0-indexed; reports are 1-indexed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrangement {
    pi_x: Vec<usize>,
    pi_y: Vec<usize>,
}

fn is_permutation(pi: &[usize]) -> bool {
    let mut seen = vec![false; pi.len()];
    pi.iter().all(|&i| {
        if i < pi.len() && !seen[i] {
            seen[i] = true;
            true
        } else {
            false
        }
    })
}

impl Arrangement {
    pub fn new(pi_x: Vec<usize>, pi_y: Vec<usize>) -> Result<Self> {
        if !is_permutation(&pi_x) || !is_permutation(&pi_y) {
            return Err(Error::ParamRange(
                "arrangement parts must be permutations of 0..len".into(),
            ));
        }
        Ok(Arrangement { pi_x, pi_y })
    }

    pub fn identity(alpha: usize, beta: usize) -> Self {
        Arrangement {
            pi_x: (0..alpha).collect(),
            pi_y: (0..beta).collect(),
        }
    }

    /// Number of arrangements of an (alpha, beta) ambient space.
    pub fn space(alpha: usize, beta: usize) -> u128 {
        factorial_u128(alpha) * factorial_u128(beta)
    }

    /// The arrangement of rank `k` in the order used by the scans: ranks
    /// sort lexicographically with the binary part outermost, and rank 0
    /// is the identity.
    pub fn at_rank(alpha: usize, beta: usize, k: u64) -> Result<Self> {
        if alpha > 20 || beta > 20 || (k as u128) >= Self::space(alpha, beta) {
            return Err(Error::ParamRange(format!(
                "no arrangement of rank {k} for ({alpha}, {beta})"
            )));
        }
        let beta_fact = factorial_u64(beta);
        Ok(Arrangement {
            pi_x: unrank_permutation(alpha, k / beta_fact),
            pi_y: unrank_permutation(beta, k % beta_fact),
        })
    }

    pub fn pi_x(&self) -> &[usize] {
        &self.pi_x
    }

    pub fn pi_y(&self) -> &[usize] {
        &self.pi_y
    }

    pub fn is_identity(&self) -> bool {
        self.pi_x.iter().enumerate().all(|(i, &p)| i == p)
            && self.pi_y.iter().enumerate().all(|(j, &p)| j == p)
    }

    pub fn inverse(&self) -> Self {
        let invert = |pi: &[usize]| {
            let mut inv = vec![0; pi.len()];
            for (i, &p) in pi.iter().enumerate() {
                inv[p] = i;
            }
            inv
        };
        Arrangement {
            pi_x: invert(&self.pi_x),
            pi_y: invert(&self.pi_y),
        }
    }

    pub fn apply(&self, v: &MixedVector) -> Result<MixedVector> {
        v.permuted(&self.pi_x, &self.pi_y)
    }

    pub fn apply_code(&self, code: &Z2Z4Code) -> Result<Z2Z4Code> {
        code.permuted(&self.pi_x, &self.pi_y)
    }

    /// 1-indexed form for reports.
    pub fn to_witness(&self) -> Witness {
        Witness::Arrangement {
            pi_x: self.pi_x.iter().map(|&i| i + 1).collect(),
            pi_y: self.pi_y.iter().map(|&j| j + 1).collect(),
        }
    }
}

/// A generator whose shift leaves the code, if any. `None` means the code
/// is closed under the simultaneous cyclic shift of both parts.
pub fn cyclic_witness(code: &Z2Z4Code) -> Result<Option<MixedVector>> {
    for g in code.reduced().all_rows() {
        if !code.contains(&g.shift())? {
            return Ok(Some(g));
        }
    }
    Ok(None)
}

/// Whether the code is closed under the coordinate shift. The shift is
/// additive, so checking the generators suffices.
pub fn is_cyclic(code: &Z2Z4Code) -> Result<bool> {
    Ok(cyclic_witness(code)?.is_none())
}

/// Result of scanning coordinate arrangements for one that makes the code
/// cyclic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ArrangementOutcome {
    /// The first arrangement (in lexicographic order) that works.
    Found(Arrangement),
    /// The whole space was scanned and nothing works.
    NoneExhausted { searched: u64 },
    /// The budget ran out before the space was exhausted.
    Inconclusive { searched: u64, space: u128 },
}

/// Looks for a coordinate arrangement under which the code is cyclic. The
/// space has alpha! * beta! candidates, scanned in lexicographic order with
/// the identity first; the first hit is returned regardless of worker
/// count. With more candidates than `budget`, only the first `budget` are
/// tried and a miss is inconclusive.
pub fn exists_cyclic_arrangement(code: &Z2Z4Code, budget: u64) -> Result<ArrangementOutcome> {
    arrangement_search(code, budget, true)
}

/// Sequential reference for [`exists_cyclic_arrangement`].
pub fn exists_cyclic_arrangement_seq(code: &Z2Z4Code, budget: u64) -> Result<ArrangementOutcome> {
    arrangement_search(code, budget, false)
}

fn arrangement_search(code: &Z2Z4Code, budget: u64, par: bool) -> Result<ArrangementOutcome> {
    let (alpha, beta) = (code.alpha(), code.beta());
    if alpha > 20 || beta > 20 {
        return Err(Error::ParamRange(format!(
            "arrangement space for ({alpha}, {beta}) does not fit in 64 bits"
        )));
    }
    let space = factorial_u128(alpha) * factorial_u128(beta);
    let searched = space.min(budget as u128) as u64;
    warm_membership(code)?;
    let beta_fact = factorial_u64(beta);
    let gens = code.reduced().all_rows();
    let hit = exec::find_first(par, searched, 64, |k| {
        let a = Arrangement {
            pi_x: unrank_permutation(alpha, k / beta_fact),
            pi_y: unrank_permutation(beta, k % beta_fact),
        };
        arranged_is_cyclic(code, &gens, &a)
    });
    Ok(match hit {
        Some(k) => ArrangementOutcome::Found(Arrangement {
            pi_x: unrank_permutation(alpha, k / beta_fact),
            pi_y: unrank_permutation(beta, k % beta_fact),
        }),
        None if space <= budget as u128 => ArrangementOutcome::NoneExhausted { searched },
        None => ArrangementOutcome::Inconclusive { searched, space },
    })
}

/// Makes `contains` cheap before a hot loop: materializes the codewords
/// when they fit, otherwise precomputes the dual generators.
fn warm_membership(code: &Z2Z4Code) -> Result<()> {
    match code.codewords_capped(1 << 16) {
        Ok(_) => Ok(()),
        Err(Error::CapExceeded { .. }) => code.dual_generators().map(|_| ()),
        Err(e) => Err(e),
    }
}

/// Whether the code becomes cyclic when its coordinates are arranged by
/// `a`: for every generator g, the pulled-back shift of the arranged g must
/// stay in the code.
fn arranged_is_cyclic(code: &Z2Z4Code, gens: &[MixedVector], a: &Arrangement) -> bool {
    let inv = a.inverse();
    gens.iter().all(|g| {
        let moved = inv
            .apply(&a.apply(g).expect("shape checked").shift())
            .expect("shape checked");
        code.contains(&moved).expect("shape checked")
    })
}

/// Perfectness by ball counting: decodes to `None` when every ambient
/// vector is within distance 1 of exactly one codeword, otherwise to the
/// least ambient vector (by canonical key) whose count is off.
pub fn sphere_check(code: &Z2Z4Code) -> Result<Option<MixedVector>> {
    sphere_scan(code, true)
}

/// Sequential reference for [`sphere_check`].
pub fn sphere_check_seq(code: &Z2Z4Code) -> Result<Option<MixedVector>> {
    sphere_scan(code, false)
}

fn sphere_scan(code: &Z2Z4Code, par: bool) -> Result<Option<MixedVector>> {
    let bits = code.ambient_bits();
    if bits > SPHERE_MAX_BITS {
        return Err(Error::CapExceeded {
            size_log2: bits as u32,
            cap: 1 << SPHERE_MAX_BITS,
        });
    }
    let set = code.codewords_capped(1 << SPHERE_MAX_BITS)?;
    let keys = set.keys_u64().expect("ambient fits in a u64 key");
    let (alpha, beta) = (code.alpha(), code.beta());
    let hit = exec::find_first(par, 1u64 << bits, 4096, |k| {
        ball_count_capped(keys, alpha, beta, k) != 1
    });
    Ok(hit.map(|k| MixedVector::decode_u64(alpha, beta, k)))
}

/// Codewords within distance 1 of the vector with key `k`, counted until 2.
/// Neighbor keys come from flipping one binary bit or moving one quaternary
/// digit by +-1 in place.
fn ball_count_capped(keys: &[u64], alpha: usize, beta: usize, k: u64) -> u32 {
    let contains = |x: u64| keys.binary_search(&x).is_ok() as u32;
    let mut n = contains(k);
    for p in 2 * beta..2 * beta + alpha {
        if n >= 2 {
            return n;
        }
        n += contains(k ^ (1 << p));
    }
    for j in 0..beta {
        let sh = 2 * (beta - 1 - j);
        let d = (k >> sh) & 3;
        let base = k - (d << sh);
        if n >= 2 {
            return n;
        }
        n += contains(base + (((d + 1) & 3) << sh));
        if n >= 2 {
            return n;
        }
        n += contains(base + (((d + 3) & 3) << sh));
    }
    n
}

/// Perfectness from the check matrix alone: the syndromes of the
/// 1 + alpha + 2*beta radius-1 errors must be pairwise distinct and fill
/// the whole syndrome group. Works for any code size.
pub fn column_check(code: &Z2Z4Code) -> Result<bool> {
    let hs = code.dual_generators()?.to_vec();
    let (alpha, beta) = (code.alpha(), code.beta());
    let ball = 1 + alpha as u128 + 2 * beta as u128;
    let syndrome_log2 = (code.ambient_bits() as u32) - code.size_log2();
    if syndrome_log2 >= 128 || ball != 1u128 << syndrome_log2 {
        return Ok(false);
    }
    let mut seen: BTreeSet<Vec<u8>> = BTreeSet::new();
    let mut insert = |e: &MixedVector| -> Result<bool> {
        let s: Vec<u8> = hs
            .iter()
            .map(|h| e.inner_product(h))
            .collect::<Result<_>>()?;
        Ok(seen.insert(s))
    };
    insert(&MixedVector::zero(alpha, beta))?;
    for i in 0..alpha {
        let mut e = MixedVector::zero(alpha, beta);
        e.set_bin(i, 1);
        if !insert(&e)? {
            return Ok(false);
        }
    }
    for j in 0..beta {
        for q in [1u8, 3] {
            let mut e = MixedVector::zero(alpha, beta);
            e.set_quat(j, q);
            if !insert(&e)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Perfectness with both routes forced to agree; a mismatch is an internal
/// error, never a verdict.
pub fn is_perfect(code: &Z2Z4Code) -> Result<bool> {
    let sphere = sphere_check(code)?.is_none();
    let columns = column_check(code)?;
    if sphere != columns {
        return Err(Error::MethodsDisagree { sphere, columns });
    }
    Ok(sphere)
}

/// A pair of Gray images whose sum leaves the Gray image of the code, if
/// any. Only generator pairs need checking: the obstruction
/// `Gray(u) ^ Gray(v) = Gray(u + v + 2(u.v))` is biadditive mod 2, and the
/// diagonal terms 2(g.g) = 2g are codewords already.
pub fn gray_nonlinearity_witness(
    code: &Z2Z4Code,
) -> Result<Option<(BinaryVector, BinaryVector)>> {
    let gens = code.reduced().all_rows();
    for (i, a) in gens.iter().enumerate() {
        for b in &gens[i + 1..] {
            if !code.contains(&a.doubled_product(b)?)? {
                return Ok(Some((a.gray(), b.gray())));
            }
        }
    }
    Ok(None)
}

/// Whether the Gray image of the code is linear.
pub fn gray_image_linear(code: &Z2Z4Code) -> Result<bool> {
    Ok(gray_nonlinearity_witness(code)?.is_none())
}

/// Linearity by brute force over all pairs of Gray images; the oracle for
/// the generator-pair shortcut. Limited to 2^12 codewords.
pub fn gray_image_linear_exhaustive(code: &Z2Z4Code) -> Result<bool> {
    if code.ambient_bits() > 64 {
        return Err(Error::ParamRange(
            "exhaustive Gray check needs the image to fit in a u64".into(),
        ));
    }
    let set = code.codewords_capped(1 << 12)?;
    let keys: Vec<u64> = set
        .iter()
        .map(|v| v.gray().encode_u64().expect("length checked"))
        .collect();
    let mut sorted = keys.clone();
    sorted.sort_unstable();
    for a in &keys {
        for b in &keys {
            if sorted.binary_search(&(a ^ b)).is_err() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Checks the divisibility pattern of beta by alpha across the perfect
/// family: beta is a multiple of alpha exactly at the ends t = r and
/// t = 2r, which is what lets those parameters carry a cyclic structure.
pub fn verify_prop_3_1(r: usize, t: usize) -> Result<AuditReport> {
    let start = Instant::now();
    let ty = perfect_code_type(r, t)?;
    let rem = ty.beta % ty.alpha;
    let boundary = t == r || t == 2 * r;
    let verdict = if (rem == 0) == boundary {
        Verdict::Holds
    } else {
        Verdict::Fails
    };
    let mut report = AuditReport::new("prop_3_1", verdict)
        .with_param("r", r as i64)
        .with_param("t", t as i64)
        .with_counter("alpha", ty.alpha as i64)
        .with_counter("beta", ty.beta as i64)
        .with_counter("rem", rem as i64);
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

fn support_minus_weight(x: &BinaryVector, y: &BinaryVector) -> u32 {
    x.words()
        .iter()
        .zip(y.words())
        .map(|(a, b)| (a & !b).count_ones())
        .sum()
}

/// Checks the overlap parity in the simplex code: for every ordered pair
/// (x, y) of codewords, |supp(x) minus supp(y)| is even when r > 2. Any two
/// distinct nonzero codewords share exactly 2^(r-2) positions, which is odd
/// only at r = 2, so the claim does not apply there.
pub fn verify_lemma_3_7(r: usize) -> Result<AuditReport> {
    let start = Instant::now();
    let s = simplex_cyclic(r)?;
    let words: Vec<MixedVector> = s.codewords()?.iter().cloned().collect();
    let supports: Vec<BinaryVector> = words.iter().map(|v| v.x_part()).collect();

    let mut odd_pairs = 0i64;
    let mut witness: Option<Witness> = None;
    let mut overlaps: BTreeSet<u32> = BTreeSet::new();
    for (i, x) in supports.iter().enumerate() {
        for (j, y) in supports.iter().enumerate() {
            let outside = support_minus_weight(x, y);
            if outside % 2 == 1 {
                odd_pairs += 1;
                if witness.is_none() {
                    witness = Some(Witness::VectorPair([
                        words[i].to_string(),
                        words[j].to_string(),
                    ]));
                }
            }
            if i != j && !x.is_zero() && !y.is_zero() {
                overlaps.insert(x.weight() - outside);
            }
        }
    }

    let verdict = if r == 2 {
        Verdict::NotApplicable
    } else if odd_pairs == 0 {
        Verdict::Holds
    } else {
        Verdict::Fails
    };
    let mut report = AuditReport::new("lemma_3_7", verdict)
        .with_param("r", r as i64)
        .with_counter("pairs", (words.len() * words.len()) as i64)
        .with_counter("odd_pairs", odd_pairs);
    if overlaps.len() == 1 {
        report = report.with_counter(
            "common_support",
            *overlaps.first().unwrap() as i64,
        );
    }
    if verdict == Verdict::Fails {
        report.witness = witness;
    }
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

/// Checks the shape of the dual D of the cyclic perfect (3, 6) code: the
/// binary projection is the simplex code, the codewords with zero binary
/// part form the order <= 2 subcode, that subcode halves to the doubled
/// simplex codewords (s, s), and every order-4 codeword has quaternary
/// symbol counts 4/1/1 for odd/two/zero. Only r = 2 has this dual.
pub fn verify_structure_d(r: usize) -> Result<AuditReport> {
    let start = Instant::now();
    if r != 2 {
        let mut report = AuditReport::new("structure_d", Verdict::NotApplicable)
            .with_param("r", r as i64);
        report.elapsed_ms = start.elapsed().as_millis() as u64;
        return Ok(report);
    }

    let d = build_cstar().dual()?;
    let words: Vec<MixedVector> = d.codewords()?.iter().cloned().collect();
    let simplex: BTreeSet<Vec<u8>> = simplex_cyclic(2)?
        .codewords()?
        .iter()
        .map(|v| v.encode_bytes())
        .collect();

    let mut fail: Option<Witness> = None;
    let mut order_two = 0i64;
    let mut order_four = 0i64;

    // Binary projections must give exactly the simplex code.
    let projections: BTreeSet<Vec<u8>> = words
        .iter()
        .map(|v| {
            MixedVector::from_symbols(
                &(0..v.alpha()).map(|i| v.bin_symbol(i)).collect::<Vec<_>>(),
                &[],
            )
            .unwrap()
            .encode_bytes()
        })
        .collect();
    if projections != simplex {
        fail = Some(Witness::Vector("binary projection mismatch".into()));
    }

    // Codewords with zero binary part must be the order <= 2 subcode.
    let zero_x: BTreeSet<Vec<u8>> = words
        .iter()
        .filter(|v| v.x_part().is_zero())
        .map(|v| v.encode_bytes())
        .collect();
    let subcode: BTreeSet<Vec<u8>> = d
        .order_two_subcode()
        .codewords()?
        .iter()
        .map(|v| v.encode_bytes())
        .collect();
    if zero_x != subcode {
        fail = fail.or(Some(Witness::Vector(
            "zero-projection codewords differ from the order-2 subcode".into(),
        )));
    }

    // Halved order <= 2 codewords must be the simplex codewords repeated
    // twice, and order-4 codewords must have symbol counts 4/1/1.
    let expected_doubles: BTreeSet<Vec<u8>> = simplex_cyclic(2)?
        .codewords()?
        .iter()
        .map(|v| {
            let mut bits: Vec<u8> = (0..3).map(|i| v.bin_symbol(i)).collect();
            let copy = bits.clone();
            bits.extend(copy);
            bits
        })
        .collect();
    let mut halved: BTreeSet<Vec<u8>> = BTreeSet::new();
    for v in &words {
        if v.order() <= 2 {
            order_two += 1;
            match v.y_twos_to_ones() {
                Some(h) => {
                    halved.insert((0..h.len()).map(|i| h.get(i)).collect());
                }
                None => fail = fail.or(Some(Witness::Vector(v.to_string()))),
            }
        } else {
            order_four += 1;
            let counts = (0..v.beta()).fold([0u32; 3], |mut acc, j| {
                match v.quat_symbol(j) {
                    0 => acc[0] += 1,
                    2 => acc[2] += 1,
                    _ => acc[1] += 1,
                }
                acc
            });
            if counts != [1, 4, 1] {
                fail = fail.or(Some(Witness::Vector(v.to_string())));
            }
        }
    }
    if halved != expected_doubles {
        fail = fail.or(Some(Witness::Vector(
            "halved subcode differs from the repeated simplex".into(),
        )));
    }

    let verdict = if fail.is_none() {
        Verdict::Holds
    } else {
        Verdict::Fails
    };
    let mut report = AuditReport::new("structure_d", verdict)
        .with_param("r", 2)
        .with_counter("size", words.len() as i64)
        .with_counter("order_two", order_two)
        .with_counter("order_four", order_four);
    report.witness = fail;
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

/// The parity obstruction that rules out cyclic extended perfect codes: a
/// replicated-block codeword would need nonnegative counts (lambda, mu)
/// with 2*lambda + mu = 2^(r-1) - 1, mu even. The audit enumerates every
/// solution and confirms mu is always odd for r > 2; r = 2 is outside the
/// claim and reports not-applicable.
pub fn audit_theorem_3_11(r: usize) -> Result<AuditReport> {
    let start = Instant::now();
    if !(2..=6).contains(&r) {
        return Err(Error::ParamRange(format!("r={r} outside 2..=6")));
    }
    if r == 2 {
        let mut report = AuditReport::new("thm_3_11", Verdict::NotApplicable)
            .with_param("r", 2);
        report.elapsed_ms = start.elapsed().as_millis() as u64;
        return Ok(report);
    }

    let target = (1i64 << (r - 1)) - 1;
    let mut solutions = 0i64;
    let mut bad: Option<(i64, i64)> = None;
    for lambda in 0..=target / 2 {
        let mu = target - 2 * lambda;
        solutions += 1;
        // Weighted form of the same constraint; a failure here is a bug.
        assert_eq!(
            (1i64 << (r - 1)) * lambda + (1i64 << (r - 2)) * mu,
            (1i64 << (r - 2)) * target
        );
        if mu % 2 == 0 {
            bad = bad.or(Some((lambda, mu)));
        }
    }

    let verdict = if bad.is_none() {
        Verdict::Holds
    } else {
        Verdict::Fails
    };
    let mut report = AuditReport::new("thm_3_11", verdict)
        .with_param("r", r as i64)
        .with_counter("solutions", solutions);
    if let Some((lambda, mu)) = bad {
        report = report
            .with_counter("bad_lambda", lambda)
            .with_counter("bad_mu", mu);
    }
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

/// Packed form of a (3, 6) vector in one u32: quaternary digit j in bits
/// 2j..2j+1, binary symbol i in bit 12+i. Used only by the closure search,
/// where it replaces word-vector arithmetic in the innermost loop.
mod packed36 {
    use crate::vector::MixedVector;

    pub const BITS: u32 = 15;
    const QUAT_MASK: u32 = 0xFFF;
    const QUAT_LO: u32 = 0x555;

    pub fn add(a: u32, b: u32) -> u32 {
        // Carries stay inside the 12 quaternary bits; the binary field
        // lands on plain xor.
        let carry = (a & b & QUAT_LO) << 1;
        (a ^ b) ^ carry
    }

    pub fn shift(v: u32) -> u32 {
        let q = v & QUAT_MASK;
        let b = v >> 12;
        let q2 = ((q << 2) | (q >> 10)) & QUAT_MASK;
        let b2 = ((b << 1) | (b >> 2)) & 7;
        (b2 << 12) | q2
    }

    pub fn weight(v: u32) -> u32 {
        let lo = v & QUAT_LO;
        let hi = (v >> 1) & QUAT_LO;
        lo.count_ones() + 2 * (hi & !lo).count_ones() + (v >> 12).count_ones()
    }

    #[cfg_attr(not(test), allow(dead_code))]
    pub fn pack(v: &MixedVector) -> u32 {
        debug_assert_eq!((v.alpha(), v.beta()), (3, 6));
        let mut out = 0u32;
        for i in 0..3 {
            out |= (v.bin_symbol(i) as u32) << (12 + i);
        }
        for j in 0..6 {
            out |= (v.quat_symbol(j) as u32) << (2 * j);
        }
        out
    }

    pub fn unpack(p: u32) -> MixedVector {
        let bin: Vec<u8> = (0..3).map(|i| ((p >> (12 + i)) & 1) as u8).collect();
        let quat: Vec<u8> = (0..6).map(|j| ((p >> (2 * j)) & 3) as u8).collect();
        MixedVector::from_symbols(&bin, &quat).unwrap()
    }
}

/// Closes the seeds under addition and shift, keeping only sets whose
/// nonzero elements all have weight 8 and whose size is exactly 16.
/// Anything else returns `None` as soon as it is detected.
fn close_candidate(seeds: &[u32]) -> Option<[u32; 16]> {
    let mut elems = [0u32; 17];
    let mut len = 0usize;

    fn push(elems: &mut [u32; 17], len: &mut usize, e: u32) -> bool {
        let w = packed36::weight(e);
        if w != 0 && w != 8 {
            return false;
        }
        if elems[..*len].contains(&e) {
            return true;
        }
        if *len == 17 {
            return false;
        }
        elems[*len] = e;
        *len += 1;
        // One more slot than the target size, so overflow shows up as 17.
        *len <= 16
    }

    for &s in seeds {
        if !push(&mut elems, &mut len, s) {
            return None;
        }
    }
    let mut i = 0;
    while i < len {
        let e = elems[i];
        if !push(&mut elems, &mut len, packed36::shift(e)) {
            return None;
        }
        for j in 0..=i {
            let sum = packed36::add(e, elems[j]);
            if !push(&mut elems, &mut len, sum) {
                return None;
            }
        }
        i += 1;
    }
    if len != 16 {
        return None;
    }
    let mut out = [0u32; 16];
    out.copy_from_slice(&elems[..16]);
    out.sort_unstable();
    Some(out)
}

/// What the closure search over weight-8 seed pairs found.
#[derive(Debug, Clone)]
pub struct UniquenessOutcome {
    /// Every shift-closed group of type (3, 6; 0, 2; 0) with nonzero
    /// weights all 8, as codes, ordered by their sorted packed codewords.
    pub survivors: Vec<Z2Z4Code>,
    /// Seed sets tried: all singles and unordered pairs of weight-8
    /// vectors.
    pub candidates: u64,
}

/// Scans every single and unordered pair of weight-8 vectors of shape
/// (3, 6) and closes each under addition and shift. The survivors are the
/// possible duals of cyclic perfect codes there: the dual weight
/// distribution forces nonzero weights 8, size 16 and type (3, 6; 0, 2; 0),
/// and a 16-element group is generated by at most two of its elements, so
/// the pair scan is exhaustive.
pub fn uniqueness_search() -> Result<UniquenessOutcome> {
    uniqueness_scan(true)
}

/// Sequential reference for [`uniqueness_search`].
pub fn uniqueness_search_seq() -> Result<UniquenessOutcome> {
    uniqueness_scan(false)
}

fn uniqueness_scan(par: bool) -> Result<UniquenessOutcome> {
    let w8: Vec<u32> = (0..1u32 << packed36::BITS)
        .filter(|&v| packed36::weight(v) == 8)
        .collect();
    let n = w8.len();

    let survivors = exec::fold_ranges(
        par,
        n as u64,
        8,
        BTreeSet::<[u32; 16]>::new(),
        |range| {
            let mut found = BTreeSet::new();
            for i in range.start as usize..range.end as usize {
                for j in i..n {
                    if let Some(set) = close_candidate(&[w8[i], w8[j]]) {
                        if is_dual_type(&set) {
                            found.insert(set);
                        }
                    }
                }
            }
            found
        },
        |mut a, b| {
            a.extend(b);
            a
        },
    );

    let codes = survivors
        .iter()
        .map(|set| {
            let words: Vec<MixedVector> = set.iter().map(|&p| packed36::unpack(p)).collect();
            Z2Z4Code::from_codeword_set(3, 6, words)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(UniquenessOutcome {
        survivors: codes,
        candidates: (n as u64) * (n as u64 + 1) / 2,
    })
}

/// Whether the 16 packed elements form a group of type (3, 6; 0, 2; 0).
fn is_dual_type(set: &[u32; 16]) -> bool {
    let rows: Vec<MixedVector> = set.iter().map(|&p| packed36::unpack(p)).collect();
    let rf = reduce(&MixedMatrix::from_rows(3, 6, rows).unwrap());
    rf.code_type() == CodeType::new(3, 6, 0, 2, 0).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{build_perfect, extend, hamming_cyclic};

    fn mv(s: &str) -> MixedVector {
        MixedVector::parse_literal(s).unwrap()
    }

    fn code(alpha: usize, beta: usize, rows: &[&str]) -> Z2Z4Code {
        let m = MixedMatrix::from_rows(alpha, beta, rows.iter().map(|s| mv(s)).collect()).unwrap();
        Z2Z4Code::from_generators(m).unwrap()
    }

    #[test]
    fn unranking_is_lexicographic() {
        assert_eq!(unrank_permutation(3, 0), vec![0, 1, 2]);
        assert_eq!(unrank_permutation(3, 1), vec![0, 2, 1]);
        assert_eq!(unrank_permutation(3, 2), vec![1, 0, 2]);
        assert_eq!(unrank_permutation(3, 5), vec![2, 1, 0]);
        let all: BTreeSet<Vec<usize>> =
            (0..24).map(|k| unrank_permutation(4, k)).collect();
        assert_eq!(all.len(), 24);
    }

    #[test]
    fn arrangement_basics() {
        assert!(Arrangement::new(vec![0, 0], vec![]).is_err());
        assert!(Arrangement::new(vec![2, 0], vec![0]).is_err());
        let a = Arrangement::new(vec![1, 2, 0], vec![1, 0]).unwrap();
        let v = mv("100|23");
        let w = a.apply(&v).unwrap();
        assert_eq!(w.to_string(), "001|32");
        assert_eq!(a.inverse().apply(&w).unwrap(), v);
        assert!(Arrangement::identity(3, 2).is_identity());
        match a.to_witness() {
            Witness::Arrangement { pi_x, pi_y } => {
                assert_eq!(pi_x, vec![2, 3, 1]);
                assert_eq!(pi_y, vec![2, 1]);
            }
            other => panic!("unexpected witness {other:?}"),
        }
    }

    #[test]
    fn cyclic_codes() {
        assert!(is_cyclic(&build_cstar()).unwrap());
        assert!(is_cyclic(&simplex_cyclic(3).unwrap()).unwrap());
        assert!(is_cyclic(&hamming_cyclic(3).unwrap()).unwrap());
        let c = code(3, 0, &["110|"]);
        assert!(!is_cyclic(&c).unwrap());
        let w = cyclic_witness(&c).unwrap().unwrap();
        assert!(!c.contains(&w.shift()).unwrap());
    }

    #[test]
    fn arrangement_search_outcomes() {
        // Already cyclic: the identity arrangement is hit first.
        match exists_cyclic_arrangement(&build_cstar(), 10).unwrap() {
            ArrangementOutcome::Found(a) => assert!(a.is_identity()),
            other => panic!("expected identity hit, got {other:?}"),
        }
        // A single fixed coordinate can never become shift closed.
        let c = code(2, 1, &["10|0"]);
        assert_eq!(
            exists_cyclic_arrangement(&c, 100).unwrap(),
            ArrangementOutcome::NoneExhausted { searched: 2 }
        );
        // Budget zero scans nothing.
        match exists_cyclic_arrangement(&c, 0).unwrap() {
            ArrangementOutcome::Inconclusive { searched: 0, space: 2 } => {}
            other => panic!("expected inconclusive, got {other:?}"),
        }
    }

    #[test]
    fn arrangement_search_recovers_shuffles() {
        // Shuffle the cyclic code, then search for an arrangement that
        // restores shift closure; parallel and sequential agree exactly.
        let shuffle = Arrangement::new(vec![1, 0, 2], vec![3, 5, 0, 2, 1, 4]).unwrap();
        let shuffled = shuffle.apply_code(&build_cstar()).unwrap();
        assert!(!is_cyclic(&shuffled).unwrap());
        let budget = 20_000;
        let par = exists_cyclic_arrangement(&shuffled, budget).unwrap();
        let seq = exists_cyclic_arrangement_seq(&shuffled, budget).unwrap();
        assert_eq!(par, seq);
        match par {
            ArrangementOutcome::Found(a) => {
                assert!(is_cyclic(&a.apply_code(&shuffled).unwrap()).unwrap());
            }
            other => panic!("expected an arrangement, got {other:?}"),
        }
    }

    #[test]
    fn sphere_check_small_codes() {
        // The binary Hamming code tiles its space.
        assert_eq!(sphere_check(&hamming_cyclic(3).unwrap()).unwrap(), None);
        // The zero code leaves vectors uncovered; the full space covers
        // them many times over.
        assert!(sphere_check(&Z2Z4Code::zero_code(1, 1)).unwrap().is_some());
        assert!(sphere_check(&Z2Z4Code::full_space(2, 2)).unwrap().is_some());
        // Parallel equals sequential, witness included.
        let c = code(2, 2, &["11|10", "01|21"]);
        assert_eq!(sphere_check(&c).unwrap(), sphere_check_seq(&c).unwrap());
    }

    #[test]
    fn perfect_codes_pass_both_routes() {
        for (r, t) in [(2, 2), (2, 3), (2, 4), (3, 4)] {
            let c = build_perfect(r, t).unwrap();
            assert!(is_perfect(&c).unwrap(), "({r}, {t})");
        }
        assert!(is_perfect(&build_cstar()).unwrap());
        assert!(!is_perfect(&Z2Z4Code::zero_code(2, 2)).unwrap());
        assert!(!is_perfect(&extend(&build_cstar()).unwrap()).unwrap());
    }

    #[test]
    fn sphere_cap() {
        let c = build_perfect(3, 5).unwrap();
        assert!(matches!(
            sphere_check(&c),
            Err(Error::CapExceeded { size_log2: 31, .. })
        ));
        // The column route still answers.
        assert!(column_check(&c).unwrap());
    }

    #[test]
    fn gray_linearity() {
        // Binary codes map to themselves.
        assert!(gray_image_linear(&hamming_cyclic(3).unwrap()).unwrap());
        // The cyclic perfect (3, 6) code has a nonlinear Gray image.
        let c = build_cstar();
        assert!(!gray_image_linear(&c).unwrap());
        assert!(!gray_image_linear_exhaustive(&c).unwrap());
        let (a, b) = gray_nonlinearity_witness(&c).unwrap().unwrap();
        // The xor of the witness images is not a Gray image of the code.
        let gray_keys: BTreeSet<u64> = c
            .codewords()
            .unwrap()
            .iter()
            .map(|v| v.gray().encode_u64().unwrap())
            .collect();
        let x = a.encode_u64().unwrap() ^ b.encode_u64().unwrap();
        assert!(gray_keys.contains(&a.encode_u64().unwrap()));
        assert!(gray_keys.contains(&b.encode_u64().unwrap()));
        assert!(!gray_keys.contains(&x));
    }

    #[test]
    fn gray_shortcut_matches_exhaustive() {
        // Pseudo-random small codes, fixed seed.
        let mut state = 0x3c6e_f372u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..40 {
            let alpha = (next() % 3 + 1) as usize;
            let beta = (next() % 3 + 1) as usize;
            let rows = (next() % 3 + 1) as usize;
            let mut m = MixedMatrix::new(alpha, beta);
            for _ in 0..rows {
                let bin: Vec<u8> = (0..alpha).map(|_| (next() % 2) as u8).collect();
                let quat: Vec<u8> = (0..beta).map(|_| (next() % 4) as u8).collect();
                m.push(MixedVector::from_symbols(&bin, &quat).unwrap())
                    .unwrap();
            }
            let c = Z2Z4Code::from_generators(m).unwrap();
            assert_eq!(
                gray_image_linear(&c).unwrap(),
                gray_image_linear_exhaustive(&c).unwrap(),
                "type {}",
                c.code_type()
            );
        }
    }

    #[test]
    fn prop_3_1_reports() {
        let rep = verify_prop_3_1(2, 3).unwrap();
        assert_eq!(rep.verdict, Verdict::Holds);
        assert_eq!(rep.counters["alpha"], 3);
        assert_eq!(rep.counters["beta"], 2);
        assert_eq!(rep.counters["rem"], 2);
        for r in 2..=6 {
            for t in r..=2 * r {
                assert_eq!(
                    verify_prop_3_1(r, t).unwrap().verdict,
                    Verdict::Holds,
                    "({r}, {t})"
                );
            }
        }
        assert!(verify_prop_3_1(1, 2).is_err());
    }

    #[test]
    fn lemma_3_7_reports() {
        for r in 3..=5 {
            let rep = verify_lemma_3_7(r).unwrap();
            assert_eq!(rep.verdict, Verdict::Holds, "r={r}");
            assert_eq!(rep.counters["odd_pairs"], 0);
            assert_eq!(rep.counters["common_support"], 1 << (r - 2));
        }
        let rep = verify_lemma_3_7(2).unwrap();
        assert_eq!(rep.verdict, Verdict::NotApplicable);
        assert_eq!(rep.counters["common_support"], 1);
        assert!(rep.counters["odd_pairs"] > 0);
    }

    #[test]
    fn structure_d_reports() {
        let rep = verify_structure_d(2).unwrap();
        assert_eq!(rep.verdict, Verdict::Holds);
        assert_eq!(rep.counters["size"], 16);
        assert_eq!(rep.counters["order_two"], 4);
        assert_eq!(rep.counters["order_four"], 12);
        assert_eq!(
            verify_structure_d(3).unwrap().verdict,
            Verdict::NotApplicable
        );
    }

    #[test]
    fn thm_3_11_reports() {
        for r in 3..=6 {
            let rep = audit_theorem_3_11(r).unwrap();
            assert_eq!(rep.verdict, Verdict::Holds, "r={r}");
            assert_eq!(rep.counters["solutions"], 1 << (r - 2));
        }
        assert_eq!(
            audit_theorem_3_11(2).unwrap().verdict,
            Verdict::NotApplicable
        );
        assert!(audit_theorem_3_11(7).is_err());
    }

    #[test]
    fn packed36_matches_vectors_exhaustively() {
        for p in 0..1u32 << packed36::BITS {
            let v = packed36::unpack(p);
            assert_eq!(packed36::pack(&v), p);
            assert_eq!(packed36::weight(p), v.weight());
            assert_eq!(packed36::pack(&v.shift()), packed36::shift(p));
        }
        // Addition on a spread of pairs.
        for p in (0..1u32 << packed36::BITS).step_by(37) {
            for q in (0..1u32 << packed36::BITS).step_by(251) {
                let sum = packed36::unpack(p).add(&packed36::unpack(q)).unwrap();
                assert_eq!(packed36::pack(&sum), packed36::add(p, q));
            }
        }
    }

    #[test]
    fn close_candidate_on_the_known_dual() {
        let d = build_cstar().dual().unwrap();
        let keys: Vec<u32> = d
            .codewords()
            .unwrap()
            .iter()
            .map(packed36::pack)
            .collect();
        let mut expected = [0u32; 16];
        expected.copy_from_slice(&keys);
        expected.sort_unstable();
        // Each check row alone closes to the whole 16-element dual.
        for row in build_cstar().check_matrix().unwrap().rows() {
            let p = packed36::pack(row);
            let closed = close_candidate(&[p, p]).unwrap();
            assert_eq!(closed, expected);
            assert!(is_dual_type(&closed));
        }
        // A seed whose double has weight off the distribution dies fast.
        let bad = packed36::pack(&mv("110|111111"));
        assert_eq!(packed36::weight(bad), 8);
        assert_eq!(close_candidate(&[bad, bad]), None);
    }
}
