//! Z2Z4-additive codes: canonical generator reduction, types, duals,
//! punctures, enumeration and membership.
//!
//! A code is an additive subgroup of `Z2^alpha x Z4^beta`. Its type is the
//! tuple `(alpha, beta; gamma, delta; kappa)`: the canonical generator form
//! has `gamma` rows of order 2 and `delta` rows of order 4, the code has
//! `2^(gamma + 2*delta)` codewords, and `kappa` is the binary dimension of
//! the X-projection of the order <= 2 subcode.

use crate::vector::{BinaryVector, MixedVector};
use crate::z4linalg::{kernel_mod4, Z4Mat};
use crate::{Error, Result};
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

/// Default bound on materialized codeword sets (2^20 codewords).
pub const DEFAULT_ENUMERATION_CAP: u64 = 1 << 20;

/// Vectors over a brute-force dual scan are preferred up to this many
/// ambient bits; beyond it the dual is solved as a kernel over Z4.
const BRUTE_DUAL_MAX_BITS: usize = 20;

/// An ordered list of generators, all of the same shape.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MixedMatrix {
    alpha: usize,
    beta: usize,
    rows: Vec<MixedVector>,
}

impl MixedMatrix {
    pub fn new(alpha: usize, beta: usize) -> Self {
        MixedMatrix {
            alpha,
            beta,
            rows: Vec::new(),
        }
    }

    pub fn from_rows(alpha: usize, beta: usize, rows: Vec<MixedVector>) -> Result<Self> {
        let mut m = MixedMatrix::new(alpha, beta);
        for r in rows {
            m.push(r)?;
        }
        Ok(m)
    }

    pub fn push(&mut self, row: MixedVector) -> Result<()> {
        if row.alpha() != self.alpha || row.beta() != self.beta {
            return Err(Error::ShapeMismatch(
                row.alpha(),
                row.beta(),
                self.alpha,
                self.beta,
            ));
        }
        self.rows.push(row);
        Ok(())
    }

    pub fn alpha(&self) -> usize {
        self.alpha
    }

    pub fn beta(&self) -> usize {
        self.beta
    }

    pub fn rows(&self) -> &[MixedVector] {
        &self.rows
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// The rows together with every distinct cyclic shift of each row.
    pub fn sigma_closure(&self) -> MixedMatrix {
        let mut out = self.clone();
        let period = lcm(self.alpha.max(1), self.beta.max(1));
        let mut seen: Vec<MixedVector> = out.rows.clone();
        for row in &self.rows {
            let mut cur = row.clone();
            for _ in 1..period {
                cur = cur.shift();
                if !seen.contains(&cur) {
                    seen.push(cur.clone());
                    out.rows.push(cur.clone());
                }
            }
        }
        out
    }
}

fn lcm(a: usize, b: usize) -> usize {
    fn gcd(a: usize, b: usize) -> usize {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    a / gcd(a, b) * b
}

/// The type `(alpha, beta; gamma, delta; kappa)` of a code.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CodeType {
    pub alpha: usize,
    pub beta: usize,
    pub gamma: usize,
    pub delta: usize,
    pub kappa: usize,
}

impl CodeType {
    pub fn new(
        alpha: usize,
        beta: usize,
        gamma: usize,
        delta: usize,
        kappa: usize,
    ) -> Result<Self> {
        let t = CodeType {
            alpha,
            beta,
            gamma,
            delta,
            kappa,
        };
        if kappa > gamma.min(alpha) || delta > beta || gamma + 2 * delta > alpha + 2 * beta {
            return Err(Error::InvalidType(t.to_string()));
        }
        Ok(t)
    }

    /// log2 of the number of codewords, `gamma + 2*delta`.
    pub fn size_log2(&self) -> u32 {
        (self.gamma + 2 * self.delta) as u32
    }

    /// The type of the dual code:
    /// `(alpha, beta; alpha + gamma - 2*kappa, beta - gamma - delta + kappa; alpha - kappa)`.
    pub fn dual_type(&self) -> Result<CodeType> {
        let gamma = (self.alpha + self.gamma)
            .checked_sub(2 * self.kappa)
            .ok_or_else(|| Error::InvalidType(format!("dual of {self} has negative gamma")))?;
        let delta = (self.beta + self.kappa)
            .checked_sub(self.gamma + self.delta)
            .ok_or_else(|| Error::InvalidType(format!("dual of {self} has negative delta")))?;
        let kappa = self.alpha - self.kappa;
        CodeType::new(self.alpha, self.beta, gamma, delta, kappa)
    }
}

impl fmt::Display for CodeType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {}; {}, {}; {})",
            self.alpha, self.beta, self.gamma, self.delta, self.kappa
        )
    }
}

/// Canonical generator form: `gamma` rows of order 2 and `delta` rows of
/// order 4, each owning a pivot column no other row uses. Removing any row
/// strictly shrinks the span.
#[derive(Debug, Clone)]
pub struct ReducedForm {
    alpha: usize,
    beta: usize,
    order_two: Vec<MixedVector>,
    order_four: Vec<MixedVector>,
    kappa: usize,
}

impl ReducedForm {
    pub fn gamma(&self) -> usize {
        self.order_two.len()
    }

    pub fn delta(&self) -> usize {
        self.order_four.len()
    }

    pub fn kappa(&self) -> usize {
        self.kappa
    }

    pub fn order_two_rows(&self) -> &[MixedVector] {
        &self.order_two
    }

    pub fn order_four_rows(&self) -> &[MixedVector] {
        &self.order_four
    }

    /// All rows, order-2 rows first.
    pub fn all_rows(&self) -> Vec<MixedVector> {
        let mut out = self.order_two.clone();
        out.extend(self.order_four.iter().cloned());
        out
    }

    pub fn size_log2(&self) -> u32 {
        (self.gamma() + 2 * self.delta()) as u32
    }

    pub fn code_type(&self) -> CodeType {
        CodeType {
            alpha: self.alpha,
            beta: self.beta,
            gamma: self.gamma(),
            delta: self.delta(),
            kappa: self.kappa,
        }
    }
}

/// Brings generators to canonical form by mixed Gaussian elimination.
///
/// Three passes. First, unit pivots in the quaternary part: at the lowest
/// column holding an odd entry in an unused row, normalize to 1 and clear
/// the column from every other row. A column that has no odd entry when
/// visited never gains one, because every later pivot row is even there, so
/// one ascending pass exhausts the units. Second, the surviving rows are
/// even throughout the quaternary part; an entry 2 becomes an order-2 pivot
/// and the column is cleared from the other even rows (order-4 pivot rows
/// are reduced to {0, 1} there). Third, binary columns pivot on 1 and clear
/// the whole column. Within a column the lowest unused row wins. Leftover
/// rows are zero and are dropped.
pub fn reduce(matrix: &MixedMatrix) -> ReducedForm {
    let (alpha, beta) = (matrix.alpha(), matrix.beta());
    let mut rows: Vec<MixedVector> = matrix.rows().to_vec();
    let n = rows.len();
    let mut is_pivot = vec![false; n];
    let mut order_four_at: Vec<usize> = Vec::new();
    let mut order_two_at: Vec<usize> = Vec::new();

    for j in 0..beta {
        let odd = (0..n).find(|&r| !is_pivot[r] && rows[r].quat_symbol(j) & 1 == 1);
        if let Some(r) = odd {
            if rows[r].quat_symbol(j) == 3 {
                rows[r] = rows[r].scalar_mul(3);
            }
            let pivot = rows[r].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i == r {
                    continue;
                }
                let c = row.quat_symbol(j);
                if c != 0 {
                    row.add_scaled_assign(&pivot, 4 - c);
                }
            }
            is_pivot[r] = true;
            order_four_at.push(r);
        }
    }
    for j in 0..beta {
        let two = (0..n).find(|&r| !is_pivot[r] && rows[r].quat_symbol(j) == 2);
        if let Some(r) = two {
            let pivot = rows[r].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i == r {
                    continue;
                }
                // Unused rows hold 0 or 2 here; order-4 pivot rows may hold
                // anything and are reduced to {0, 1}.
                if row.quat_symbol(j) >= 2 {
                    row.add_scaled_assign(&pivot, 1);
                }
            }
            is_pivot[r] = true;
            order_two_at.push(r);
        }
    }
    for i_col in 0..alpha {
        let hit = (0..n).find(|&r| !is_pivot[r] && rows[r].bin_symbol(i_col) == 1);
        if let Some(r) = hit {
            let pivot = rows[r].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i != r && row.bin_symbol(i_col) == 1 {
                    row.add_scaled_assign(&pivot, 1);
                }
            }
            is_pivot[r] = true;
            order_two_at.push(r);
        }
    }
    debug_assert!(
        rows.iter()
            .enumerate()
            .all(|(i, r)| is_pivot[i] || r.is_zero()),
        "unprocessed nonzero row after elimination"
    );

    let order_four: Vec<MixedVector> = order_four_at.iter().map(|&r| rows[r].clone()).collect();
    let order_two: Vec<MixedVector> = order_two_at.iter().map(|&r| rows[r].clone()).collect();
    debug_assert!(order_four.iter().all(|r| r.order() == 4));
    debug_assert!(order_two.iter().all(|r| r.order() == 2));

    let kappa = binary_rank(order_two.iter().map(|r| r.x_part()));
    ReducedForm {
        alpha,
        beta,
        order_two,
        order_four,
        kappa,
    }
}

/// Rank over F2 of a list of binary vectors.
fn binary_rank<I: IntoIterator<Item = BinaryVector>>(rows: I) -> usize {
    let mut basis: Vec<Vec<u64>> = Vec::new();
    for row in rows {
        let mut w: Vec<u64> = row.words().to_vec();
        for b in &basis {
            let lead = b.iter().rposition(|&x| x != 0).unwrap();
            let bit = 63 - b[lead].leading_zeros() as usize;
            if w.len() > lead && (w[lead] >> bit) & 1 == 1 {
                for (wi, bi) in w.iter_mut().zip(b) {
                    *wi ^= bi;
                }
            }
        }
        if w.iter().any(|&x| x != 0) {
            basis.push(w);
        }
    }
    basis.len()
}

/// Enumerates the span of the generators. Refuses spans larger than `cap`.
pub fn span(matrix: &MixedMatrix, cap: u64) -> Result<Vec<MixedVector>> {
    let rf = reduce(matrix);
    enumerate_reduced(&rf, cap)
}

fn enumerate_reduced(rf: &ReducedForm, cap: u64) -> Result<Vec<MixedVector>> {
    let log2 = rf.size_log2();
    if log2 >= 63 || (1u64 << log2) > cap {
        return Err(Error::CapExceeded {
            size_log2: log2,
            cap,
        });
    }
    let gamma = rf.gamma();
    let delta = rf.delta();
    let mut out = Vec::with_capacity(1 << log2);
    for k in 0..(1u64 << log2) {
        let mut v = MixedVector::zero(rf.alpha, rf.beta);
        for (d, row) in rf.order_four.iter().enumerate() {
            let c = ((k >> (2 * d)) & 3) as u8;
            v.add_scaled_assign(row, c);
        }
        for (g, row) in rf.order_two.iter().enumerate() {
            if (k >> (2 * delta + g)) & 1 == 1 {
                v.add_scaled_assign(row, 1);
            }
        }
        let _ = gamma;
        out.push(v);
    }
    Ok(out)
}

/// A materialized code: codewords sorted by their canonical key.
#[derive(Debug, Clone)]
pub struct CodewordSet {
    vectors: Vec<MixedVector>,
    keys64: Option<Vec<u64>>,
    keys_bytes: Option<Vec<Vec<u8>>>,
}

impl CodewordSet {
    fn build(mut vectors: Vec<MixedVector>) -> Self {
        let small = vectors.first().is_none_or(|v| v.binary_length() <= 64);
        if small {
            vectors.sort_by_key(|v| v.encode_u64().unwrap());
            vectors.dedup();
            let keys = vectors.iter().map(|v| v.encode_u64().unwrap()).collect();
            CodewordSet {
                vectors,
                keys64: Some(keys),
                keys_bytes: None,
            }
        } else {
            vectors.sort_by_key(|v| v.encode_bytes());
            vectors.dedup();
            let keys = vectors.iter().map(|v| v.encode_bytes()).collect();
            CodewordSet {
                vectors,
                keys64: None,
                keys_bytes: Some(keys),
            }
        }
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &MixedVector> {
        self.vectors.iter()
    }

    pub fn contains(&self, v: &MixedVector) -> bool {
        if let (Some(keys), Some(k)) = (&self.keys64, v.encode_u64()) {
            return keys.binary_search(&k).is_ok();
        }
        if let Some(keys) = &self.keys_bytes {
            return keys.binary_search(&v.encode_bytes()).is_ok();
        }
        false
    }

    /// Sorted integer keys, available when `alpha + 2*beta <= 64`.
    pub fn keys_u64(&self) -> Option<&[u64]> {
        self.keys64.as_deref()
    }
}

/// A Z2Z4-additive code, immutable once constructed. Enumeration and dual
/// generators are computed on first use and cached.
#[derive(Debug, Clone)]
pub struct Z2Z4Code {
    alpha: usize,
    beta: usize,
    generators: MixedMatrix,
    check: Option<MixedMatrix>,
    reduced: ReducedForm,
    ty: CodeType,
    codewords: OnceLock<CodewordSet>,
    dual_gens: OnceLock<Vec<MixedVector>>,
}

impl Z2Z4Code {
    /// A code presented by generators (any rows; they are reduced here).
    pub fn from_generators(generators: MixedMatrix) -> Result<Self> {
        let reduced = reduce(&generators);
        let ty = reduced.code_type();
        CodeType::new(ty.alpha, ty.beta, ty.gamma, ty.delta, ty.kappa)?;
        Ok(Z2Z4Code {
            alpha: generators.alpha(),
            beta: generators.beta(),
            generators,
            check: None,
            reduced,
            ty,
            codewords: OnceLock::new(),
            dual_gens: OnceLock::new(),
        })
    }

    /// The code whose codewords are orthogonal to every row of `check`.
    pub fn from_parity_check(check: MixedMatrix) -> Result<Self> {
        let check_reduced = reduce(&check);
        let gens = dual_generators_of(&check_reduced)?;
        let matrix = MixedMatrix::from_rows(check.alpha(), check.beta(), gens)?;
        let mut code = Z2Z4Code::from_generators(matrix)?;
        // The span of the check rows is exactly the dual, so membership
        // tests come for free.
        code.dual_gens.set(check_reduced.all_rows()).ok();
        code.check = Some(check);
        Ok(code)
    }

    /// A code given as a complete codeword set. Fails unless the set is an
    /// additive group (the span of the set must have the same cardinality).
    pub fn from_codeword_set(
        alpha: usize,
        beta: usize,
        codewords: Vec<MixedVector>,
    ) -> Result<Self> {
        let set = CodewordSet::build(codewords);
        let matrix = MixedMatrix::from_rows(alpha, beta, set.vectors.clone())?;
        let code = Z2Z4Code::from_generators(matrix)?;
        if (set.len() as u128) != code.size() {
            return Err(Error::InvalidType(
                "codeword set is not an additive group".into(),
            ));
        }
        code.codewords.set(set).ok();
        Ok(code)
    }

    /// The zero code {0} of the given shape.
    pub fn zero_code(alpha: usize, beta: usize) -> Self {
        Z2Z4Code::from_generators(MixedMatrix::new(alpha, beta)).unwrap()
    }

    /// The full ambient space Z2^alpha x Z4^beta.
    pub fn full_space(alpha: usize, beta: usize) -> Self {
        let mut m = MixedMatrix::new(alpha, beta);
        for i in 0..alpha {
            let mut v = MixedVector::zero(alpha, beta);
            v.set_bin(i, 1);
            m.push(v).unwrap();
        }
        for j in 0..beta {
            let mut v = MixedVector::zero(alpha, beta);
            v.set_quat(j, 1);
            m.push(v).unwrap();
        }
        Z2Z4Code::from_generators(m).unwrap()
    }

    pub fn alpha(&self) -> usize {
        self.alpha
    }

    pub fn beta(&self) -> usize {
        self.beta
    }

    /// Bits of the ambient space, `alpha + 2*beta`.
    pub fn ambient_bits(&self) -> usize {
        self.alpha + 2 * self.beta
    }

    pub fn code_type(&self) -> CodeType {
        self.ty
    }

    pub fn reduced(&self) -> &ReducedForm {
        &self.reduced
    }

    /// The generators the code was constructed from.
    pub fn generators(&self) -> &MixedMatrix {
        &self.generators
    }

    /// The parity check matrix, when the code was built from one.
    pub fn check_matrix(&self) -> Option<&MixedMatrix> {
        self.check.as_ref()
    }

    pub fn size_log2(&self) -> u32 {
        self.reduced.size_log2()
    }

    pub fn size(&self) -> u128 {
        1u128 << self.size_log2()
    }

    /// Materializes the codeword set under the default cap.
    pub fn codewords(&self) -> Result<&CodewordSet> {
        self.codewords_capped(DEFAULT_ENUMERATION_CAP)
    }

    /// Materializes the codeword set if it fits in `cap`.
    pub fn codewords_capped(&self, cap: u64) -> Result<&CodewordSet> {
        if let Some(set) = self.codewords.get() {
            return Ok(set);
        }
        let all = enumerate_reduced(&self.reduced, cap)?;
        let _ = self.codewords.set(CodewordSet::build(all));
        Ok(self.codewords.get().unwrap())
    }

    /// Reduced generators of the dual code (cached).
    pub fn dual_generators(&self) -> Result<&[MixedVector]> {
        if let Some(g) = self.dual_gens.get() {
            return Ok(g);
        }
        let gens = dual_generators_of(&self.reduced)?;
        let rf = reduce(&MixedMatrix::from_rows(self.alpha, self.beta, gens)?);
        let _ = self.dual_gens.set(rf.all_rows());
        Ok(self.dual_gens.get().unwrap())
    }

    /// The dual code under the Z2Z4 inner product.
    pub fn dual(&self) -> Result<Z2Z4Code> {
        let rows = self.dual_generators()?.to_vec();
        let matrix = MixedMatrix::from_rows(self.alpha, self.beta, rows)?;
        let mut dual = Z2Z4Code::from_generators(matrix)?;
        dual.check = Some(self.generators.clone());
        dual.dual_gens.set(self.reduced.all_rows()).ok();
        Ok(dual)
    }

    fn check_shape(&self, v: &MixedVector) -> Result<()> {
        if v.alpha() != self.alpha || v.beta() != self.beta {
            return Err(Error::ShapeMismatch(
                v.alpha(),
                v.beta(),
                self.alpha,
                self.beta,
            ));
        }
        Ok(())
    }

    /// Membership. Uses the materialized set when present, otherwise the
    /// syndrome against the dual generators.
    pub fn contains(&self, v: &MixedVector) -> Result<bool> {
        self.check_shape(v)?;
        if let Some(set) = self.codewords.get() {
            return Ok(set.contains(v));
        }
        self.contains_by_syndrome(v)
    }

    /// Membership via inner products with every dual generator.
    pub fn contains_by_syndrome(&self, v: &MixedVector) -> Result<bool> {
        self.check_shape(v)?;
        for h in self.dual_generators()? {
            if v.inner_product(h)? != 0 {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Membership by binary search in the materialized codeword set.
    pub fn contains_by_set(&self, v: &MixedVector) -> Result<bool> {
        self.check_shape(v)?;
        Ok(self.codewords()?.contains(v))
    }

    /// Minimum distance = minimum nonzero weight (the code is a group).
    /// `None` for the zero code.
    pub fn min_distance(&self, cap: u64) -> Result<Option<u32>> {
        let set = self.codewords_capped(cap)?;
        Ok(set
            .iter()
            .filter(|v| !v.is_zero())
            .map(|v| v.weight())
            .min())
    }

    /// Weight distribution of the code (equivalently, of its Gray image).
    pub fn weight_distribution(&self, cap: u64) -> Result<WeightDistribution> {
        let set = self.codewords_capped(cap)?;
        Ok(WeightDistribution::from_weights(
            set.iter().map(|v| v.weight()),
        ))
    }

    /// The projection onto the binary part, as a code with `beta = 0`.
    pub fn punctured_x(&self, cap: u64) -> Result<Z2Z4Code> {
        let set = self.codewords_capped(cap)?;
        let projected = set
            .iter()
            .map(|v| {
                let x = v.x_part();
                let bits: Vec<u8> = (0..x.len()).map(|i| x.get(i)).collect();
                MixedVector::from_symbols(&bits, &[]).unwrap()
            })
            .collect();
        Z2Z4Code::from_codeword_set(self.alpha, 0, projected)
    }

    /// The projection onto the quaternary part, as a code with `alpha = 0`.
    pub fn punctured_y(&self, cap: u64) -> Result<Z2Z4Code> {
        let set = self.codewords_capped(cap)?;
        let projected = set.iter().map(|v| v.y_part()).collect();
        Z2Z4Code::from_codeword_set(0, self.beta, projected)
    }

    /// The subcode of codewords of order at most 2. Generated by the
    /// order-2 reduced rows and the doubles of the order-4 rows, so no
    /// enumeration is needed.
    pub fn order_two_subcode(&self) -> Z2Z4Code {
        let mut rows = self.reduced.order_two_rows().to_vec();
        rows.extend(self.reduced.order_four_rows().iter().map(|r| r.double()));
        let m = MixedMatrix::from_rows(self.alpha, self.beta, rows).unwrap();
        Z2Z4Code::from_generators(m).unwrap()
    }

    /// The code with coordinates reordered by the given pulls; generators
    /// and any parity check matrix are permuted alike.
    pub fn permuted(&self, pi_x: &[usize], pi_y: &[usize]) -> Result<Z2Z4Code> {
        let rows = self
            .generators
            .rows()
            .iter()
            .map(|r| r.permuted(pi_x, pi_y))
            .collect::<Result<Vec<_>>>()?;
        let mut code =
            Z2Z4Code::from_generators(MixedMatrix::from_rows(self.alpha, self.beta, rows)?)?;
        if let Some(check) = &self.check {
            let check_rows = check
                .rows()
                .iter()
                .map(|r| r.permuted(pi_x, pi_y))
                .collect::<Result<Vec<_>>>()?;
            code.check = Some(MixedMatrix::from_rows(self.alpha, self.beta, check_rows)?);
        }
        Ok(code)
    }

    /// True if both codes have the same codewords.
    pub fn same_code(&self, other: &Z2Z4Code) -> Result<bool> {
        if self.alpha != other.alpha || self.beta != other.beta || self.ty != other.ty {
            return Ok(false);
        }
        for g in self.reduced.all_rows() {
            if !other.contains(&g)? {
                return Ok(false);
            }
        }
        for g in other.reduced.all_rows() {
            if !self.contains(&g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Generators of the dual computed by scanning the whole ambient space.
    /// Only valid when `alpha + 2*beta <= 20`; used as an oracle for the
    /// kernel route.
    pub fn dual_brute_force(&self) -> Result<Vec<MixedVector>> {
        dual_by_scan(&self.reduced)
    }

    /// Generators of the dual computed by solving a kernel over Z4 with the
    /// binary coordinates embedded as doubled columns.
    pub fn dual_via_kernel(&self) -> Result<Vec<MixedVector>> {
        Ok(dual_by_kernel(&self.reduced))
    }
}

/// Dual generators with the route picked by ambient size.
fn dual_generators_of(rf: &ReducedForm) -> Result<Vec<MixedVector>> {
    if rf.alpha + 2 * rf.beta <= BRUTE_DUAL_MAX_BITS {
        dual_by_scan(rf)
    } else {
        Ok(dual_by_kernel(rf))
    }
}

fn dual_by_scan(rf: &ReducedForm) -> Result<Vec<MixedVector>> {
    let bits = rf.alpha + 2 * rf.beta;
    if bits > BRUTE_DUAL_MAX_BITS {
        return Err(Error::CapExceeded {
            size_log2: bits as u32,
            cap: 1 << BRUTE_DUAL_MAX_BITS,
        });
    }
    let gens = rf.all_rows();
    let mut dual = Vec::new();
    'outer: for key in 0..(1u64 << bits) {
        let v = MixedVector::decode_u64(rf.alpha, rf.beta, key);
        for g in &gens {
            if v.inner_product(g).unwrap() != 0 {
                continue 'outer;
            }
        }
        dual.push(v);
    }
    let m = MixedMatrix::from_rows(rf.alpha, rf.beta, dual)?;
    Ok(reduce(&m).all_rows())
}

fn dual_by_kernel(rf: &ReducedForm) -> Vec<MixedVector> {
    let gens = rf.all_rows();
    let (alpha, beta) = (rf.alpha, rf.beta);
    let cols = alpha + beta;
    let mut m = Z4Mat::zero(gens.len(), cols);
    for (i, g) in gens.iter().enumerate() {
        // Binary coordinates contribute 2*u_i*v_i to the inner product, so
        // they enter the system as doubled columns; the unknown there only
        // matters mod 2.
        for a in 0..alpha {
            m.set(i, a, 2 * g.bin_symbol(a));
        }
        for b in 0..beta {
            m.set(i, alpha + b, g.quat_symbol(b));
        }
    }
    let mut out = Vec::new();
    for t in kernel_mod4(&m) {
        let bin: Vec<u8> = t[..alpha].iter().map(|&x| x & 1).collect();
        let quat: Vec<u8> = t[alpha..].to_vec();
        let v = MixedVector::from_symbols(&bin, &quat).unwrap();
        if !v.is_zero() {
            out.push(v);
        }
    }
    out
}

/// Codeword counts by weight.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeightDistribution(pub BTreeMap<u32, u64>);

impl WeightDistribution {
    pub fn from_weights<I: IntoIterator<Item = u32>>(weights: I) -> Self {
        let mut map = BTreeMap::new();
        for w in weights {
            *map.entry(w).or_insert(0) += 1;
        }
        WeightDistribution(map)
    }

    pub fn total(&self) -> u64 {
        self.0.values().sum()
    }

    pub fn count(&self, w: u32) -> u64 {
        self.0.get(&w).copied().unwrap_or(0)
    }
}

impl fmt::Display for WeightDistribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (w, c)) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{w}: {c}")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mv(s: &str) -> MixedVector {
        MixedVector::parse_literal(s).unwrap()
    }

    fn matrix(alpha: usize, beta: usize, rows: &[&str]) -> MixedMatrix {
        MixedMatrix::from_rows(alpha, beta, rows.iter().map(|s| mv(s)).collect()).unwrap()
    }

    /// The parity check rows of the cyclic perfect (3, 6) code.
    fn h_rows() -> MixedMatrix {
        matrix(3, 6, &["110|112310", "011|011231"])
    }

    #[test]
    fn reduce_of_check_rows() {
        let rf = reduce(&h_rows());
        assert_eq!((rf.gamma(), rf.delta()), (0, 2));
        // Adding the cyclic closure of the rows changes nothing: the span
        // of the two rows is already shift closed.
        let rf2 = reduce(&h_rows().sigma_closure());
        assert_eq!((rf2.gamma(), rf2.delta()), (0, 2));
        let s1 = span(&h_rows(), 1 << 10).unwrap();
        let s2 = span(&h_rows().sigma_closure(), 1 << 10).unwrap();
        assert_eq!(CodewordSet::build(s1).vectors, CodewordSet::build(s2).vectors);
    }

    #[test]
    fn reduce_binary_rows() {
        let m = matrix(3, 0, &["110|", "011|", "101|"]);
        let rf = reduce(&m);
        assert_eq!((rf.gamma(), rf.delta(), rf.kappa()), (2, 0, 2));
    }

    #[test]
    fn reduce_exhausts_units_before_twos() {
        // The single row (|21) has order 4: a 2 in the first column must
        // not shadow the unit in the second.
        let rf = reduce(&matrix(0, 2, &["|21"]));
        assert_eq!((rf.gamma(), rf.delta()), (0, 1));
        assert_eq!(span(&matrix(0, 2, &["|21"]), 16).unwrap().len(), 4);
        // Mixed case: a 2 ahead of the unit column plus a true order-2 row.
        let rf = reduce(&matrix(1, 2, &["1|21", "0|20"]));
        assert_eq!((rf.gamma(), rf.delta()), (1, 1));
    }

    #[test]
    fn reduce_empty_and_duplicates() {
        let rf = reduce(&MixedMatrix::new(2, 2));
        assert_eq!((rf.gamma(), rf.delta()), (0, 0));
        let m = matrix(1, 1, &["1|2", "1|2", "0|0"]);
        let rf = reduce(&m);
        assert_eq!((rf.gamma(), rf.delta()), (1, 0));
    }

    #[test]
    fn reduce_is_stable_under_itself() {
        let m = matrix(2, 3, &["10|123", "01|221", "11|302", "10|001"]);
        let rf = reduce(&m);
        let again = reduce(&MixedMatrix::from_rows(2, 3, rf.all_rows()).unwrap());
        assert_eq!((rf.gamma(), rf.delta()), (again.gamma(), again.delta()));
        let s1 = span(&m, 1 << 12).unwrap();
        let s2 = span(
            &MixedMatrix::from_rows(2, 3, again.all_rows()).unwrap(),
            1 << 12,
        )
        .unwrap();
        assert_eq!(CodewordSet::build(s1).len(), CodewordSet::build(s2).len());
    }

    #[test]
    fn span_sizes() {
        assert_eq!(span(&h_rows(), 1 << 10).unwrap().len(), 16);
        assert_eq!(span(&MixedMatrix::new(2, 1), 16).unwrap(), vec![MixedVector::zero(2, 1)]);
        // Refuses to enumerate past the cap.
        let full = Z2Z4Code::full_space(3, 6);
        assert!(matches!(
            span(full.generators(), 1 << 10),
            Err(Error::CapExceeded { size_log2: 15, .. })
        ));
    }

    #[test]
    fn span_has_unique_elements() {
        let m = matrix(2, 2, &["10|12", "01|20", "11|31"]);
        let all = span(&m, 1 << 12).unwrap();
        let set = CodewordSet::build(all.clone());
        assert_eq!(set.len(), all.len());
        let rf = reduce(&m);
        assert_eq!(all.len() as u32, 1 << rf.size_log2());
    }

    #[test]
    fn code_type_examples() {
        let c = Z2Z4Code::from_generators(matrix(2, 1, &["11|0"])).unwrap();
        assert_eq!(c.code_type(), CodeType::new(2, 1, 1, 0, 1).unwrap());
        let full = Z2Z4Code::full_space(3, 6);
        assert_eq!(full.code_type(), CodeType::new(3, 6, 3, 6, 3).unwrap());
        let zero = Z2Z4Code::zero_code(3, 6);
        assert_eq!(zero.code_type(), CodeType::new(3, 6, 0, 0, 0).unwrap());
        assert_eq!(zero.code_type().to_string(), "(3, 6; 0, 0; 0)");
    }

    #[test]
    fn dual_type_formula() {
        let t = CodeType::new(3, 6, 3, 4, 3).unwrap();
        assert_eq!(t.dual_type().unwrap(), CodeType::new(3, 6, 0, 2, 0).unwrap());
        let h7 = CodeType::new(7, 0, 4, 0, 4).unwrap();
        assert_eq!(h7.dual_type().unwrap(), CodeType::new(7, 0, 3, 0, 3).unwrap());
        // Involution.
        for t in [
            CodeType::new(3, 6, 3, 4, 3).unwrap(),
            CodeType::new(3, 2, 2, 1, 2).unwrap(),
            CodeType::new(4, 4, 2, 2, 1).unwrap(),
        ] {
            assert_eq!(t.dual_type().unwrap().dual_type().unwrap(), t);
        }
        // A tuple whose dual would need negative delta.
        let bad = CodeType::new(2, 2, 2, 2, 0).unwrap();
        assert!(bad.dual_type().is_err());
    }

    #[test]
    fn code_type_validation() {
        assert!(CodeType::new(2, 2, 1, 0, 2).is_err()); // kappa > gamma
        assert!(CodeType::new(2, 2, 0, 3, 0).is_err()); // delta > beta
        assert!(CodeType::new(1, 1, 2, 1, 1).is_err()); // too many codewords
    }

    #[test]
    fn dual_of_degenerate_codes() {
        let zero = Z2Z4Code::zero_code(2, 2);
        let d = zero.dual().unwrap();
        assert_eq!(d.code_type(), CodeType::new(2, 2, 2, 2, 2).unwrap());
        let dd = d.dual().unwrap();
        assert_eq!(dd.size_log2(), 0);
    }

    #[test]
    fn dual_routes_agree_small() {
        let m = matrix(2, 2, &["11|12", "01|31"]);
        let c = Z2Z4Code::from_generators(m).unwrap();
        let brute = c.dual_brute_force().unwrap();
        let kern = c.dual_via_kernel().unwrap();
        let cb = Z2Z4Code::from_generators(MixedMatrix::from_rows(2, 2, brute).unwrap()).unwrap();
        let ck = Z2Z4Code::from_generators(MixedMatrix::from_rows(2, 2, kern).unwrap()).unwrap();
        assert!(cb.same_code(&ck).unwrap());
        // |C| * |dual| = |ambient|
        assert_eq!(c.size_log2() + cb.size_log2(), 6);
    }

    #[test]
    fn dual_dual_is_identity() {
        for rows in [
            vec!["10|12", "01|22"],
            vec!["11|11"],
            vec!["00|20", "10|00"],
        ] {
            let m = matrix(2, 2, &rows);
            let c = Z2Z4Code::from_generators(m).unwrap();
            let dd = c.dual().unwrap().dual().unwrap();
            assert!(c.same_code(&dd).unwrap());
        }
    }

    #[test]
    fn contains_matches_set() {
        let c = Z2Z4Code::from_generators(h_rows()).unwrap();
        for key in 0..(1u64 << 15) {
            if key % 97 != 0 {
                continue;
            }
            let v = MixedVector::decode_u64(3, 6, key);
            assert_eq!(
                c.contains_by_syndrome(&v).unwrap(),
                c.contains_by_set(&v).unwrap()
            );
        }
        assert!(c.contains(&mv("110|112310")).unwrap());
        assert!(c.contains(&MixedVector::zero(3, 6)).unwrap());
    }

    #[test]
    fn order_two_subcode_size() {
        let c = Z2Z4Code::from_generators(h_rows()).unwrap();
        let b = c.order_two_subcode();
        // 2^(gamma + delta) codewords of order <= 2.
        assert_eq!(b.size_log2(), 2);
        assert!(b
            .codewords()
            .unwrap()
            .iter()
            .all(|v| v.order() <= 2));
    }

    #[test]
    fn punctures_of_small_code() {
        let c = Z2Z4Code::from_generators(matrix(2, 2, &["11|02", "01|11"])).unwrap();
        let px = c.punctured_x(1 << 10).unwrap();
        assert_eq!(px.alpha(), 2);
        assert_eq!(px.beta(), 0);
        let py = c.punctured_y(1 << 10).unwrap();
        assert_eq!(py.alpha(), 0);
        assert_eq!(py.beta(), 2);
        // Projections of a group are groups; sizes divide the code size.
        assert_eq!(c.size() % px.size(), 0);
        assert_eq!(c.size() % py.size(), 0);
    }

    #[test]
    fn weight_distribution_basics() {
        let zero = Z2Z4Code::zero_code(2, 2);
        let wd = zero.weight_distribution(16).unwrap();
        assert_eq!(wd.to_string(), "{0: 1}");
        let c = Z2Z4Code::from_generators(matrix(0, 1, &["|1"])).unwrap();
        let wd = c.weight_distribution(16).unwrap();
        assert_eq!(wd.count(0), 1);
        assert_eq!(wd.count(1), 2);
        assert_eq!(wd.count(2), 1);
        assert_eq!(wd.total(), 4);
    }

    #[test]
    fn min_distance_small() {
        let c = Z2Z4Code::from_generators(matrix(3, 0, &["111|"])).unwrap();
        assert_eq!(c.min_distance(16).unwrap(), Some(3));
        assert_eq!(Z2Z4Code::zero_code(1, 1).min_distance(16).unwrap(), None);
    }

    #[test]
    fn from_codeword_set_rejects_non_groups() {
        let vs = vec![mv("0|0"), mv("1|0"), mv("0|1")];
        assert!(Z2Z4Code::from_codeword_set(1, 1, vs).is_err());
        let good = vec![mv("0|0"), mv("0|2")];
        let c = Z2Z4Code::from_codeword_set(1, 1, good).unwrap();
        assert_eq!(c.size_log2(), 1);
    }

    #[test]
    fn permuted_code_keeps_type() {
        let c = Z2Z4Code::from_generators(h_rows()).unwrap();
        let p = c.permuted(&[2, 0, 1], &[1, 2, 3, 4, 5, 0]).unwrap();
        assert_eq!(p.code_type(), c.code_type());
        assert_eq!(
            p.weight_distribution(1 << 10).unwrap(),
            c.weight_distribution(1 << 10).unwrap()
        );
    }
}
