//! Vectors over Z2^alpha x Z4^beta and plain binary vectors.
//!
//! A [`MixedVector`] keeps its binary part packed one bit per symbol and its
//! quaternary part packed two bits per symbol, so addition, negation, weight
//! and the inner product run word parallel. Symbol positions are 0-indexed
//! everywhere in this crate; reports and the CLI add 1 when printing.

use crate::{Error, Result};
use std::fmt;
use std::str::FromStr;

/// Low bit of every two-bit lane.
const LANE_LO: u64 = 0x5555_5555_5555_5555;

#[inline]
fn bin_words(alpha: usize) -> usize {
    alpha.div_ceil(64)
}

#[inline]
fn quat_words(beta: usize) -> usize {
    beta.div_ceil(32)
}

/// An element of Z2^alpha x Z4^beta.
///
/// The vector is immutable once built. `alpha` or `beta` may be zero, making
/// pure binary and pure quaternary vectors degenerate cases of the same type.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MixedVector {
    alpha: usize,
    beta: usize,
    bin: Vec<u64>,
    quat: Vec<u64>,
}

impl MixedVector {
    /// The zero vector of shape `(alpha, beta)`.
    pub fn zero(alpha: usize, beta: usize) -> Self {
        MixedVector {
            alpha,
            beta,
            bin: vec![0; bin_words(alpha)],
            quat: vec![0; quat_words(beta)],
        }
    }

    /// Builds a vector from explicit symbols: `bin` over {0,1}, `quat` over {0..3}.
    pub fn from_symbols(bin: &[u8], quat: &[u8]) -> Result<Self> {
        let mut v = MixedVector::zero(bin.len(), quat.len());
        for (i, &b) in bin.iter().enumerate() {
            if b > 1 {
                return Err(Error::SymbolOutOfRange(b, "binary"));
            }
            v.set_bin(i, b);
        }
        for (j, &q) in quat.iter().enumerate() {
            if q > 3 {
                return Err(Error::SymbolOutOfRange(q, "quaternary"));
            }
            v.set_quat(j, q);
        }
        Ok(v)
    }

    /// Parses the literal syntax `"110|112310"`. Either side may be empty;
    /// whitespace around the bar is ignored.
    pub fn parse_literal(s: &str) -> Result<Self> {
        parse_literal_msg(s).map_err(|msg| Error::Parse { line: 1, msg })
    }

    pub fn alpha(&self) -> usize {
        self.alpha
    }

    pub fn beta(&self) -> usize {
        self.beta
    }

    /// Length of the Gray image, `alpha + 2*beta`.
    pub fn binary_length(&self) -> usize {
        self.alpha + 2 * self.beta
    }

    #[inline]
    pub fn bin_symbol(&self, i: usize) -> u8 {
        debug_assert!(i < self.alpha);
        ((self.bin[i / 64] >> (i % 64)) & 1) as u8
    }

    #[inline]
    pub fn quat_symbol(&self, j: usize) -> u8 {
        debug_assert!(j < self.beta);
        ((self.quat[j / 32] >> (2 * (j % 32))) & 3) as u8
    }

    #[inline]
    pub(crate) fn set_bin(&mut self, i: usize, b: u8) {
        debug_assert!(i < self.alpha && b <= 1);
        let w = i / 64;
        let sh = i % 64;
        self.bin[w] = (self.bin[w] & !(1 << sh)) | ((b as u64) << sh);
    }

    #[inline]
    pub(crate) fn set_quat(&mut self, j: usize, q: u8) {
        debug_assert!(j < self.beta && q <= 3);
        let w = j / 32;
        let sh = 2 * (j % 32);
        self.quat[w] = (self.quat[w] & !(3 << sh)) | ((q as u64) << sh);
    }

    fn check_shape(&self, other: &Self) -> Result<()> {
        if self.alpha != other.alpha || self.beta != other.beta {
            return Err(Error::ShapeMismatch(
                self.alpha,
                self.beta,
                other.alpha,
                other.beta,
            ));
        }
        Ok(())
    }

    /// Componentwise sum: XOR on the binary part, addition mod 4 on the
    /// quaternary part.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        let mut out = self.clone();
        out.add_assign_unchecked(other);
        Ok(out)
    }

    /// `self - other`.
    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.negate())
    }

    pub(crate) fn add_assign_unchecked(&mut self, other: &Self) {
        for (a, b) in self.bin.iter_mut().zip(&other.bin) {
            *a ^= b;
        }
        // Two-bit lanes are independent: the only carry is from the low bit
        // into the high bit of the same lane.
        for (a, b) in self.quat.iter_mut().zip(&other.quat) {
            let carry = (*a & *b & LANE_LO) << 1;
            *a = (*a ^ *b) ^ carry;
        }
    }

    /// Adds `scale * other` in place (scale taken mod 4, and mod 2 on the
    /// binary part). Used by the reduction routines.
    pub(crate) fn add_scaled_assign(&mut self, other: &Self, scale: u8) {
        match scale & 3 {
            0 => {}
            1 => self.add_assign_unchecked(other),
            2 => self.add_assign_unchecked(&other.scalar_mul(2)),
            _ => self.add_assign_unchecked(&other.negate()),
        }
    }

    /// Componentwise additive inverse. Binary symbols are self-inverse; a
    /// quaternary symbol q maps to 4 - q mod 4.
    pub fn negate(&self) -> Self {
        let mut out = self.clone();
        for w in out.quat.iter_mut() {
            *w ^= (*w & LANE_LO) << 1;
        }
        out
    }

    /// Scalar multiple `c * self` with `c` in Z4 (the binary part sees `c mod 2`).
    pub fn scalar_mul(&self, c: u8) -> Self {
        match c & 3 {
            0 => MixedVector::zero(self.alpha, self.beta),
            1 => self.clone(),
            2 => {
                let mut out = self.clone();
                for w in out.bin.iter_mut() {
                    *w = 0;
                }
                for w in out.quat.iter_mut() {
                    *w = (*w & LANE_LO) << 1;
                }
                out
            }
            _ => self.negate(),
        }
    }

    /// `2 * self`: an order <= 2 vector with zero binary part.
    pub fn double(&self) -> Self {
        self.scalar_mul(2)
    }

    pub fn is_zero(&self) -> bool {
        self.bin.iter().all(|&w| w == 0) && self.quat.iter().all(|&w| w == 0)
    }

    /// Additive order of the vector: 1, 2 or 4.
    pub fn order(&self) -> u8 {
        if self.quat.iter().any(|&w| w & LANE_LO != 0) {
            4
        } else if self.is_zero() {
            1
        } else {
            2
        }
    }

    /// Mixed weight: Hamming weight of the binary part plus Lee weight
    /// (0, 1, 2, 1 for 0, 1, 2, 3) of the quaternary part.
    pub fn weight(&self) -> u32 {
        let mut w: u32 = self.bin.iter().map(|x| x.count_ones()).sum();
        for &q in &self.quat {
            let lo = q & LANE_LO;
            let hi = (q >> 1) & LANE_LO;
            w += lo.count_ones() + 2 * (hi & !lo).count_ones();
        }
        w
    }

    /// Mixed distance `weight(self - other)`. The Gray map turns this into
    /// Hamming distance exactly.
    pub fn distance(&self, other: &Self) -> Result<u32> {
        Ok(self.sub(other)?.weight())
    }

    /// The Z2Z4 inner product
    /// `2 * sum(u_i v_i) + sum(u'_j v'_j) mod 4`, reported in Z4.
    pub fn inner_product(&self, other: &Self) -> Result<u8> {
        self.check_shape(other)?;
        let mut bin_parity: u32 = 0;
        for (a, b) in self.bin.iter().zip(&other.bin) {
            bin_parity += (a & b).count_ones();
        }
        let mut ones: u32 = 0;
        let mut twos: u32 = 0;
        for (a, b) in self.quat.iter().zip(&other.quat) {
            let (al, ah) = (a & LANE_LO, (a >> 1) & LANE_LO);
            let (bl, bh) = (b & LANE_LO, (b >> 1) & LANE_LO);
            // Per lane: (2ah + al)(2bh + bl) mod 4 has low bit al*bl and
            // high bit (ah*bl) xor (al*bh).
            ones += (al & bl).count_ones();
            twos += ((ah & bl) ^ (al & bh)).count_ones();
        }
        Ok(((2 * bin_parity + ones + 2 * twos) % 4) as u8)
    }

    /// Simultaneous right cyclic shift of both parts.
    pub fn shift(&self) -> Self {
        self.shift_by(1)
    }

    /// `shift` applied `k` times; each part rotates by `k mod` its length.
    pub fn shift_by(&self, k: usize) -> Self {
        let mut out = MixedVector::zero(self.alpha, self.beta);
        if self.alpha > 0 {
            let k = k % self.alpha;
            for i in 0..self.alpha {
                out.set_bin((i + k) % self.alpha, self.bin_symbol(i));
            }
        }
        if self.beta > 0 {
            let k = k % self.beta;
            for j in 0..self.beta {
                out.set_quat((j + k) % self.beta, self.quat_symbol(j));
            }
        }
        out
    }

    /// Gray image: the binary part unchanged, each quaternary symbol mapped
    /// by 0 -> 00, 1 -> 01, 2 -> 11, 3 -> 10.
    pub fn gray(&self) -> BinaryVector {
        let mut out = BinaryVector::zero(self.binary_length());
        for i in 0..self.alpha {
            out.set(i, self.bin_symbol(i));
        }
        for j in 0..self.beta {
            let s = self.quat_symbol(j);
            out.set(self.alpha + 2 * j, s >> 1);
            out.set(self.alpha + 2 * j + 1, (s & 1) ^ (s >> 1));
        }
        out
    }

    /// Projection onto the binary part.
    pub fn x_part(&self) -> BinaryVector {
        let mut out = BinaryVector::zero(self.alpha);
        for i in 0..self.alpha {
            out.set(i, self.bin_symbol(i));
        }
        out
    }

    /// Projection onto the quaternary part, as a vector with `alpha = 0`.
    pub fn y_part(&self) -> MixedVector {
        let mut out = MixedVector::zero(0, self.beta);
        out.quat.copy_from_slice(&self.quat);
        out
    }

    /// Halves an all-even quaternary part (2 -> 1, 0 -> 0), or `None` if any
    /// symbol is odd. Applies to order <= 2 vectors.
    pub fn y_twos_to_ones(&self) -> Option<BinaryVector> {
        if self.quat.iter().any(|&w| w & LANE_LO != 0) {
            return None;
        }
        let mut out = BinaryVector::zero(self.beta);
        for j in 0..self.beta {
            out.set(j, self.quat_symbol(j) >> 1);
        }
        Some(out)
    }

    /// Componentwise product doubled, `2 * (self . other)`, nonzero exactly
    /// where both symbols are odd. `Gray(u) ^ Gray(v) = Gray(u + v + 2(u.v))`,
    /// which is what makes this the linearity obstruction of the Gray image.
    pub fn doubled_product(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        let mut out = MixedVector::zero(self.alpha, self.beta);
        for (o, (a, b)) in out.quat.iter_mut().zip(self.quat.iter().zip(&other.quat)) {
            *o = (a & b & LANE_LO) << 1;
        }
        Ok(out)
    }

    /// Reorders symbols: entry `i` of the result is entry `pi_x[i]` (or
    /// `pi_y[j]`) of `self`. The two parts never mix.
    pub fn permuted(&self, pi_x: &[usize], pi_y: &[usize]) -> Result<Self> {
        if pi_x.len() != self.alpha || pi_y.len() != self.beta {
            return Err(Error::ShapeMismatch(
                pi_x.len(),
                pi_y.len(),
                self.alpha,
                self.beta,
            ));
        }
        let mut out = MixedVector::zero(self.alpha, self.beta);
        for (i, &src) in pi_x.iter().enumerate() {
            out.set_bin(i, self.bin_symbol(src));
        }
        for (j, &src) in pi_y.iter().enumerate() {
            out.set_quat(j, self.quat_symbol(src));
        }
        Ok(out)
    }

    /// Canonical byte key: one byte per symbol, binary part first.
    /// Lexicographic order on keys is the canonical order on vectors.
    pub fn encode_bytes(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(self.alpha + self.beta);
        for i in 0..self.alpha {
            out.push(self.bin_symbol(i));
        }
        for j in 0..self.beta {
            out.push(self.quat_symbol(j));
        }
        out
    }

    /// Canonical integer key when `alpha + 2*beta <= 64`: the literal read
    /// as a number, binary part most significant.
    pub fn encode_u64(&self) -> Option<u64> {
        if self.binary_length() > 64 {
            return None;
        }
        let mut v: u64 = 0;
        for i in 0..self.alpha {
            v = (v << 1) | self.bin_symbol(i) as u64;
        }
        for j in 0..self.beta {
            v = (v << 2) | self.quat_symbol(j) as u64;
        }
        Some(v)
    }

    /// Inverse of [`encode_u64`](Self::encode_u64) for the given shape.
    pub fn decode_u64(alpha: usize, beta: usize, mut key: u64) -> Self {
        let mut out = MixedVector::zero(alpha, beta);
        for j in (0..beta).rev() {
            out.set_quat(j, (key & 3) as u8);
            key >>= 2;
        }
        for i in (0..alpha).rev() {
            out.set_bin(i, (key & 1) as u8);
            key >>= 1;
        }
        out
    }
}

impl fmt::Display for MixedVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.alpha {
            write!(f, "{}", self.bin_symbol(i))?;
        }
        write!(f, "|")?;
        for j in 0..self.beta {
            write!(f, "{}", self.quat_symbol(j))?;
        }
        Ok(())
    }
}

impl FromStr for MixedVector {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        MixedVector::parse_literal(s)
    }
}

pub(crate) fn parse_literal_msg(s: &str) -> std::result::Result<MixedVector, String> {
    let s = s.trim();
    let mut parts = s.split('|');
    let (left, right) = match (parts.next(), parts.next(), parts.next()) {
        (Some(l), Some(r), None) => (l.trim(), r.trim()),
        (_, _, Some(_)) => return Err("vector literal has more than one '|'".into()),
        _ => return Err("vector literal needs exactly one '|'".into()),
    };
    let mut bin = Vec::with_capacity(left.len());
    for c in left.chars() {
        match c {
            '0' => bin.push(0),
            '1' => bin.push(1),
            _ => return Err(format!("invalid binary symbol '{c}'")),
        }
    }
    let mut quat = Vec::with_capacity(right.len());
    for c in right.chars() {
        match c {
            '0'..='3' => quat.push(c as u8 - b'0'),
            _ => return Err(format!("invalid quaternary symbol '{c}'")),
        }
    }
    MixedVector::from_symbols(&bin, &quat).map_err(|e| e.to_string())
}

/// A binary vector, used for Gray images, projections and binary codes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BinaryVector {
    len: usize,
    bits: Vec<u64>,
}

impl BinaryVector {
    pub fn zero(len: usize) -> Self {
        BinaryVector {
            len,
            bits: vec![0; bin_words(len)],
        }
    }

    pub fn from_bits(bits: &[u8]) -> Result<Self> {
        let mut v = BinaryVector::zero(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b > 1 {
                return Err(Error::SymbolOutOfRange(b, "binary"));
            }
            v.set(i, b);
        }
        Ok(v)
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> u8 {
        debug_assert!(i < self.len);
        ((self.bits[i / 64] >> (i % 64)) & 1) as u8
    }

    #[inline]
    pub(crate) fn set(&mut self, i: usize, b: u8) {
        debug_assert!(i < self.len && b <= 1);
        let w = i / 64;
        let sh = i % 64;
        self.bits[w] = (self.bits[w] & !(1 << sh)) | ((b as u64) << sh);
    }

    pub fn xor(&self, other: &Self) -> Result<Self> {
        if self.len != other.len {
            return Err(Error::ShapeMismatch(self.len, 0, other.len, 0));
        }
        let mut out = self.clone();
        for (a, b) in out.bits.iter_mut().zip(&other.bits) {
            *a ^= b;
        }
        Ok(out)
    }

    pub(crate) fn words(&self) -> &[u64] {
        &self.bits
    }

    pub fn weight(&self) -> u32 {
        self.bits.iter().map(|w| w.count_ones()).sum()
    }

    pub fn hamming_distance(&self, other: &Self) -> Result<u32> {
        Ok(self.xor(other)?.weight())
    }

    pub fn is_zero(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    /// 0-indexed positions of the ones, ascending.
    pub fn support(&self) -> Vec<usize> {
        (0..self.len).filter(|&i| self.get(i) == 1).collect()
    }

    /// 0-indexed positions of the zeros, ascending.
    pub fn co_support(&self) -> Vec<usize> {
        (0..self.len).filter(|&i| self.get(i) == 0).collect()
    }

    /// Parity of the bitwise AND with `other`, the F2 dot product.
    pub fn dot(&self, other: &Self) -> Result<u8> {
        if self.len != other.len {
            return Err(Error::ShapeMismatch(self.len, 0, other.len, 0));
        }
        let mut parity = 0u32;
        for (a, b) in self.bits.iter().zip(&other.bits) {
            parity ^= (a & b).count_ones() & 1;
        }
        Ok(parity as u8)
    }

    /// Right cyclic shift by one.
    pub fn shift(&self) -> Self {
        let mut out = BinaryVector::zero(self.len);
        if self.len > 0 {
            for i in 0..self.len {
                out.set((i + 1) % self.len, self.get(i));
            }
        }
        out
    }

    /// The vector repeated `copies` times end to end.
    pub fn repeated(&self, copies: usize) -> Self {
        let mut out = BinaryVector::zero(self.len * copies);
        for c in 0..copies {
            for i in 0..self.len {
                out.set(c * self.len + i, self.get(i));
            }
        }
        out
    }

    /// Integer key (first bit most significant) when `len <= 64`.
    pub fn encode_u64(&self) -> Option<u64> {
        if self.len > 64 {
            return None;
        }
        let mut v = 0u64;
        for i in 0..self.len {
            v = (v << 1) | self.get(i) as u64;
        }
        Some(v)
    }

    pub fn decode_u64(len: usize, key: u64) -> Self {
        let mut out = BinaryVector::zero(len);
        for i in 0..len {
            out.set(i, ((key >> (len - 1 - i)) & 1) as u8);
        }
        out
    }
}

impl fmt::Display for BinaryVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            write!(f, "{}", self.get(i))?;
        }
        Ok(())
    }
}

impl FromStr for BinaryVector {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut bits = Vec::with_capacity(s.len());
        for c in s.chars() {
            match c {
                '0' => bits.push(0),
                '1' => bits.push(1),
                _ => {
                    return Err(Error::Parse {
                        line: 1,
                        msg: format!("invalid binary symbol '{c}'"),
                    })
                }
            }
        }
        BinaryVector::from_bits(&bits)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mv(s: &str) -> MixedVector {
        MixedVector::parse_literal(s).unwrap()
    }

    #[test]
    fn add_examples() {
        assert_eq!(mv("1|3").add(&mv("1|2")).unwrap(), mv("0|1"));
        assert_eq!(mv("10|33").add(&mv("11|22")).unwrap(), mv("01|11"));
        let z = MixedVector::zero(2, 2);
        assert_eq!(mv("01|23").add(&z).unwrap(), mv("01|23"));
        assert!(mv("1|3").add(&mv("11|3")).is_err());
    }

    #[test]
    fn negate_examples() {
        assert_eq!(mv("01|123").negate(), mv("01|321"));
        assert_eq!(MixedVector::zero(1, 1).negate(), MixedVector::zero(1, 1));
        let v = mv("1|2");
        assert_eq!(v.negate(), v); // twos are self-inverse
        let w = mv("110|112310");
        assert!(w.add(&w.negate()).unwrap().is_zero());
    }

    #[test]
    fn gray_examples() {
        assert_eq!(mv("1|0").gray().to_string(), "100");
        assert_eq!(mv("0|3").gray().to_string(), "010");
        assert_eq!(mv("11|2").gray().to_string(), "1111");
        assert_eq!(mv("|1").gray().to_string(), "01");
        assert_eq!(mv("|2").gray().to_string(), "11");
    }

    #[test]
    fn weight_examples() {
        assert_eq!(mv("110|112310").weight(), 8);
        assert_eq!(MixedVector::zero(4, 4).weight(), 0);
        assert_eq!(mv("|2").weight(), 2);
        assert_eq!(mv("1|123").weight(), 5);
    }

    #[test]
    fn weight_is_gray_weight() {
        for key in 0..4096u64 {
            let v = MixedVector::decode_u64(2, 5, key);
            assert_eq!(v.weight(), v.gray().weight());
        }
    }

    #[test]
    fn distance_is_gray_distance() {
        // Exhaustive on a small shape: the Gray map is an isometry.
        for a in 0..256u64 {
            for b in 0..256u64 {
                let u = MixedVector::decode_u64(2, 3, a);
                let v = MixedVector::decode_u64(2, 3, b);
                assert_eq!(
                    u.distance(&v).unwrap(),
                    u.gray().hamming_distance(&v.gray()).unwrap()
                );
            }
        }
    }

    #[test]
    fn inner_product_examples() {
        assert_eq!(mv("1|3").inner_product(&mv("1|1")).unwrap(), 1);
        assert_eq!(mv("11|").inner_product(&mv("11|")).unwrap(), 0);
        assert_eq!(mv("|13").inner_product(&mv("|11")).unwrap(), 0);
        // Symmetry on a sample.
        for a in 0..128u64 {
            let u = MixedVector::decode_u64(1, 3, a);
            let v = MixedVector::decode_u64(1, 3, a ^ 0x55);
            assert_eq!(
                u.inner_product(&v).unwrap(),
                v.inner_product(&u).unwrap()
            );
        }
    }

    #[test]
    fn inner_product_matches_symbolwise() {
        for a in 0..512u64 {
            for b in [0u64, 17, 211, 385, 511] {
                let u = MixedVector::decode_u64(3, 3, a);
                let v = MixedVector::decode_u64(3, 3, b);
                let mut expect = 0u32;
                for i in 0..3 {
                    expect += 2 * (u.bin_symbol(i) * v.bin_symbol(i)) as u32;
                }
                for j in 0..3 {
                    expect += (u.quat_symbol(j) * v.quat_symbol(j)) as u32;
                }
                assert_eq!(u.inner_product(&v).unwrap(), (expect % 4) as u8);
            }
        }
    }

    #[test]
    fn shift_examples() {
        // The two parts rotate simultaneously.
        assert_eq!(mv("110|112310").shift(), mv("011|011231"));
        let v = mv("100|200000");
        assert_eq!(v.shift_by(6), mv("100|200000").shift_by(6));
        assert_eq!(v.shift_by(6).shift_by(6).shift_by(6), v.shift_by(18));
        // Period divides lcm(alpha, beta).
        assert_eq!(v.shift_by(6), {
            let mut w = v.clone();
            for _ in 0..6 {
                w = w.shift();
            }
            w
        });
        // alpha = 0 rotates the quaternary part only.
        assert_eq!(mv("|123").shift(), mv("|312"));
        assert_eq!(mv("101|").shift(), mv("110|"));
    }

    #[test]
    fn shift_is_additive() {
        for a in 0..256u64 {
            let u = MixedVector::decode_u64(2, 3, a);
            let v = MixedVector::decode_u64(2, 3, a.wrapping_mul(37) & 255);
            assert_eq!(
                u.add(&v).unwrap().shift(),
                u.shift().add(&v.shift()).unwrap()
            );
        }
    }

    #[test]
    fn order_examples() {
        assert_eq!(MixedVector::zero(2, 2).order(), 1);
        assert_eq!(mv("01|20").order(), 2);
        assert_eq!(mv("0|1").order(), 4);
        assert_eq!(mv("110|112310").order(), 4);
        // order * v = 0 and the double of an order-4 vector has order 2.
        let v = mv("1|3");
        assert!(v.scalar_mul(4).is_zero());
        assert_eq!(v.double().order(), 2);
    }

    #[test]
    fn support_examples() {
        let v = BinaryVector::from_str("110").unwrap();
        assert_eq!(v.support(), vec![0, 1]);
        assert_eq!(v.co_support(), vec![2]);
        assert!(BinaryVector::zero(3).support().is_empty());
    }

    #[test]
    fn scalar_multiples() {
        let v = mv("1|123");
        assert!(v.scalar_mul(0).is_zero());
        assert_eq!(v.scalar_mul(1), v);
        assert_eq!(v.scalar_mul(2), mv("0|202"));
        assert_eq!(v.scalar_mul(3), v.negate());
    }

    #[test]
    fn doubled_product_examples() {
        assert_eq!(mv("1|13").doubled_product(&mv("0|11")).unwrap(), mv("0|22"));
        assert_eq!(mv("1|20").doubled_product(&mv("1|22")).unwrap(), mv("0|00"));
    }

    #[test]
    fn encode_round_trips() {
        for key in 0..32768u64 {
            let v = MixedVector::decode_u64(3, 6, key);
            assert_eq!(v.encode_u64(), Some(key));
        }
        let v = mv("110|112310");
        let bytes = v.encode_bytes();
        assert_eq!(bytes, vec![1, 1, 0, 1, 1, 2, 3, 1, 0]);
    }

    #[test]
    fn literal_round_trips() {
        for s in ["110|112310", "|1230", "101|", "|"] {
            assert_eq!(MixedVector::parse_literal(s).unwrap().to_string(), s);
        }
        assert!(MixedVector::parse_literal("2|0").is_err());
        assert!(MixedVector::parse_literal("0|4").is_err());
        assert!(MixedVector::parse_literal("00").is_err());
        assert!(MixedVector::parse_literal("0|1|2").is_err());
        // Whitespace around the bar is tolerated.
        assert_eq!(MixedVector::parse_literal(" 10 | 23 ").unwrap(), mv("10|23"));
    }

    #[test]
    fn permuted_pulls_sources() {
        let v = mv("110|112310");
        let w = v.permuted(&[2, 0, 1], &[5, 0, 1, 2, 3, 4]).unwrap();
        assert_eq!(w, mv("011|011231"));
        assert!(v.permuted(&[0, 1], &[0, 1, 2, 3, 4, 5]).is_err());
    }

    #[test]
    fn y_projections() {
        let v = mv("110|202020");
        assert_eq!(v.x_part().to_string(), "110");
        assert_eq!(v.y_part(), mv("|202020"));
        assert_eq!(v.y_twos_to_ones().unwrap().to_string(), "101010");
        assert!(mv("0|12").y_twos_to_ones().is_none());
    }

    #[test]
    fn binary_vector_basics() {
        let v = BinaryVector::from_str("0110").unwrap();
        assert_eq!(v.weight(), 2);
        assert_eq!(v.shift().to_string(), "0011");
        assert_eq!(v.repeated(2).to_string(), "01100110");
        assert_eq!(v.encode_u64(), Some(0b0110));
        assert_eq!(BinaryVector::decode_u64(4, 6), v);
        let w = BinaryVector::from_str("1010").unwrap();
        assert_eq!(v.xor(&w).unwrap().to_string(), "1100");
        assert_eq!(v.dot(&w).unwrap(), 1);
    }
}
