//! Runnable acceptance criteria, shared by the integration suite and the
//! `suite` verb of the command line tool. Each criterion re-derives what it
//! needs from scratch and reports pass or fail together with the reasons
//! collected along the way and a wall-clock bound it must stay under.

use crate::code::{CodeType, Z2Z4Code};
use crate::construct::{build_cstar, build_perfect, extend, hamming_cyclic, perfect_code_type};
use crate::report::Verdict;
use crate::textio;
use crate::vector::MixedVector;
use crate::verify::{self, ArrangementOutcome, DEFAULT_ARRANGEMENT_BUDGET};
use crate::{Result, DEFAULT_ENUMERATION_CAP};
use std::collections::BTreeSet;
use std::fmt::Debug;
use std::time::Instant;

/// Outcome of one criterion.
#[derive(Debug, Clone)]
pub struct CriterionResult {
    pub id: usize,
    pub name: &'static str,
    pub passed: bool,
    /// Empty on success; otherwise one line per failed check.
    pub failures: Vec<String>,
    pub elapsed_ms: u64,
}

impl CriterionResult {
    /// The single line the suite prints for this criterion.
    pub fn render(&self) -> String {
        let status = if self.passed { "pass" } else { "FAIL" };
        let mut line = format!(
            "criterion {:2} {status} ({:>6} ms)  {}",
            self.id, self.elapsed_ms, self.name
        );
        for f in &self.failures {
            line.push_str("\n    - ");
            line.push_str(f);
        }
        line
    }
}

struct Checks {
    failures: Vec<String>,
}

impl Checks {
    fn new() -> Self {
        Checks { failures: Vec::new() }
    }

    fn check(&mut self, ok: bool, what: &str) {
        if !ok {
            self.failures.push(what.to_string());
        }
    }

    fn eq<T: PartialEq + Debug>(&mut self, got: T, want: T, what: &str) {
        if got != want {
            self.failures
                .push(format!("{what}: got {got:?}, want {want:?}"));
        }
    }
}

struct Criterion {
    name: &'static str,
    limit_ms: u64,
    body: fn(&mut Checks) -> Result<()>,
}

const CRITERIA: [Criterion; 10] = [
    Criterion {
        name: "the cyclic perfect code at (3, 6)",
        limit_ms: 5_000,
        body: c1_cyclic_perfect_code,
    },
    Criterion {
        name: "the dual code and its layered structure",
        limit_ms: 1_000,
        body: c2_dual_structure,
    },
    Criterion {
        name: "Gray image: nonlinear, with the Hamming weight profile",
        limit_ms: 5_000,
        body: c3_gray_image,
    },
    Criterion {
        name: "type formulas across the perfect family",
        limit_ms: 5_000,
        body: c4_type_formulas,
    },
    Criterion {
        name: "divisibility pattern and the smallest obstruction",
        limit_ms: 1_000,
        body: c5_divisibility,
    },
    Criterion {
        name: "no cyclic arrangement for the extended codes at (3, 2) and (3, 6)",
        limit_ms: 60_000,
        body: c6_extended_codes,
    },
    Criterion {
        name: "no cyclic arrangement for the extended binary Hamming code",
        limit_ms: 60_000,
        body: c7_extended_hamming,
    },
    Criterion {
        name: "counting audits for overlaps and replication parity",
        limit_ms: 5_000,
        body: c8_counting_audits,
    },
    Criterion {
        name: "exhaustive closure search at (3, 6)",
        limit_ms: 600_000,
        body: c9_closure_search,
    },
    Criterion {
        name: "independent routes agree on random small codes",
        limit_ms: 60_000,
        body: c10_cross_validation,
    },
];

/// Number of criteria; ids run from 1 to this.
pub fn count() -> usize {
    CRITERIA.len()
}

pub fn name(id: usize) -> &'static str {
    CRITERIA[id - 1].name
}

/// Runs criterion `id` (1-based) and reports the outcome. The wall-clock
/// limit is part of the criterion: blowing it is a failure.
pub fn run(id: usize) -> CriterionResult {
    let c = &CRITERIA[id - 1];
    let mut checks = Checks::new();
    let start = Instant::now();
    if let Err(e) = (c.body)(&mut checks) {
        checks.failures.push(format!("error: {e}"));
    }
    let elapsed_ms = start.elapsed().as_millis() as u64;
    if elapsed_ms > c.limit_ms {
        checks
            .failures
            .push(format!("took {elapsed_ms} ms, limit {} ms", c.limit_ms));
    }
    CriterionResult {
        id,
        name: c.name,
        passed: checks.failures.is_empty(),
        failures: checks.failures,
        elapsed_ms,
    }
}

pub fn run_all() -> Vec<CriterionResult> {
    (1..=count()).map(run).collect()
}

fn c1_cyclic_perfect_code(ch: &mut Checks) -> Result<()> {
    let c = build_cstar();
    ch.eq(c.size(), 2048, "codeword count");
    ch.eq(
        c.code_type(),
        CodeType::new(3, 6, 3, 4, 3)?,
        "code type",
    );
    ch.eq(
        c.min_distance(DEFAULT_ENUMERATION_CAP)?,
        Some(3),
        "minimum distance",
    );
    ch.check(verify::is_perfect(&c)?, "perfect by both routes");
    ch.check(verify::is_cyclic(&c)?, "closed under the shift");
    Ok(())
}

fn c2_dual_structure(ch: &mut Checks) -> Result<()> {
    let d = build_cstar().dual()?;
    ch.eq(d.size(), 16, "dual size");
    ch.eq(
        d.weight_distribution(DEFAULT_ENUMERATION_CAP)?.to_string(),
        "{0: 1, 8: 15}".to_string(),
        "dual weight distribution",
    );
    let rep = verify::verify_structure_d(2)?;
    ch.eq(rep.verdict, Verdict::Holds, "layer structure verdict");
    ch.eq(
        rep.counters.get("order_two").copied(),
        Some(4),
        "order <= 2 codewords",
    );
    ch.eq(
        rep.counters.get("order_four").copied(),
        Some(12),
        "order 4 codewords",
    );
    Ok(())
}

fn c3_gray_image(ch: &mut Checks) -> Result<()> {
    let c = build_cstar();
    ch.check(
        !verify::gray_image_linear(&c)?,
        "Gray image must be nonlinear",
    );
    ch.eq(
        verify::gray_image_linear(&c)?,
        verify::gray_image_linear_exhaustive(&c)?,
        "shortcut agrees with the exhaustive check",
    );
    // The witness pair really does break closure under xor.
    let (a, b) = verify::gray_nonlinearity_witness(&c)?.expect("nonlinear");
    let image: BTreeSet<u64> = c
        .codewords()?
        .iter()
        .map(|v| v.gray().encode_u64().expect("fits"))
        .collect();
    let xored = a.encode_u64().expect("fits") ^ b.encode_u64().expect("fits");
    ch.check(
        image.contains(&a.encode_u64().expect("fits"))
            && image.contains(&b.encode_u64().expect("fits"))
            && !image.contains(&xored),
        "witness pair xors outside the image",
    );
    // Same weight profile as the binary Hamming code of length 15, built
    // independently from an m-sequence.
    let reference = hamming_cyclic(4)?;
    ch.eq(
        c.weight_distribution(DEFAULT_ENUMERATION_CAP)?,
        reference.weight_distribution(DEFAULT_ENUMERATION_CAP)?,
        "weight distribution",
    );
    ch.eq(
        c.weight_distribution(DEFAULT_ENUMERATION_CAP)?.count(3),
        35,
        "words of weight 3",
    );
    Ok(())
}

fn c4_type_formulas(ch: &mut Checks) -> Result<()> {
    let pairs = [(2, 2), (2, 3), (2, 4), (3, 3), (3, 4), (3, 5), (3, 6)];
    for (r, t) in pairs {
        // The built code's type comes from reducing an actual generator
        // matrix; the formula is closed-form. They must agree, and so must
        // the dual pair.
        let c = build_perfect(r, t)?;
        let want = perfect_code_type(r, t)?;
        ch.eq(c.code_type(), want, &format!("type at ({r}, {t})"));
        let check = c.check_matrix().expect("built from a check matrix");
        let dual_ty = crate::reduce(check).code_type();
        ch.eq(
            c.code_type().dual_type()?,
            dual_ty,
            &format!("dual type at ({r}, {t})"),
        );
    }
    let big = perfect_code_type(3, 6)?;
    ch.eq(big, CodeType::new(7, 28, 7, 25, 7)?, "type at (3, 6)");
    Ok(())
}

fn c5_divisibility(ch: &mut Checks) -> Result<()> {
    for r in 2..=6 {
        for t in r..=2 * r {
            let rep = verify::verify_prop_3_1(r, t)?;
            ch.eq(
                rep.verdict,
                Verdict::Holds,
                &format!("divisibility at ({r}, {t})"),
            );
        }
    }
    // The smallest interior parameters: alpha = 3, beta = 2. No
    // arrangement of 3 + 2 coordinates makes that code cyclic.
    let c = build_perfect(2, 3)?;
    ch.eq(
        verify::exists_cyclic_arrangement(&c, DEFAULT_ARRANGEMENT_BUDGET)?,
        ArrangementOutcome::NoneExhausted { searched: 12 },
        "arrangement scan at (3, 2)",
    );
    Ok(())
}

fn c6_extended_codes(ch: &mut Checks) -> Result<()> {
    let small = extend(&build_perfect(2, 3)?)?;
    ch.eq(
        verify::exists_cyclic_arrangement(&small, DEFAULT_ARRANGEMENT_BUDGET)?,
        ArrangementOutcome::NoneExhausted { searched: 48 },
        "extended (3, 2) code",
    );
    let big = extend(&build_cstar())?;
    ch.eq(
        verify::exists_cyclic_arrangement(&big, DEFAULT_ARRANGEMENT_BUDGET)?,
        ArrangementOutcome::NoneExhausted { searched: 17_280 },
        "extended (3, 6) code",
    );
    Ok(())
}

fn c7_extended_hamming(ch: &mut Checks) -> Result<()> {
    let c = extend(&hamming_cyclic(3)?)?;
    ch.eq(c.code_type(), CodeType::new(8, 0, 4, 0, 4)?, "extended type");
    ch.eq(
        verify::exists_cyclic_arrangement(&c, DEFAULT_ARRANGEMENT_BUDGET)?,
        ArrangementOutcome::NoneExhausted { searched: 40_320 },
        "extended binary Hamming code",
    );
    Ok(())
}

fn c8_counting_audits(ch: &mut Checks) -> Result<()> {
    for r in 3..=6 {
        let rep = verify::audit_theorem_3_11(r)?;
        ch.eq(rep.verdict, Verdict::Holds, &format!("parity audit r={r}"));
        ch.eq(
            rep.counters.get("solutions").copied(),
            Some(1 << (r - 2)),
            &format!("solution count r={r}"),
        );
    }
    ch.eq(
        verify::audit_theorem_3_11(2)?.verdict,
        Verdict::NotApplicable,
        "parity audit r=2",
    );
    for r in 3..=5 {
        ch.eq(
            verify::verify_lemma_3_7(r)?.verdict,
            Verdict::Holds,
            &format!("overlap audit r={r}"),
        );
    }
    Ok(())
}

fn c9_closure_search(ch: &mut Checks) -> Result<()> {
    let par = verify::uniqueness_search()?;
    let seq = verify::uniqueness_search_seq()?;
    ch.eq(par.candidates, 20_707_830, "candidate count");
    ch.eq(seq.candidates, par.candidates, "sequential candidate count");
    let render = |out: &verify::UniquenessOutcome| -> Vec<String> {
        out.survivors.iter().map(textio::format_code).collect()
    };
    ch.eq(
        render(&par),
        render(&seq),
        "parallel and sequential survivors",
    );
    // As sets there are six survivors: the known dual, its two binary
    // rotations with the quaternary part held still, and the coordinate
    // reversals of those. All of them are one code up to arrangement.
    ch.eq(par.survivors.len(), 6, "survivor count");
    let known = build_cstar().dual()?;
    ch.check(
        par.survivors
            .iter()
            .any(|s| s.same_code(&known).unwrap_or(false)),
        "the known dual is among the survivors",
    );
    for s in &par.survivors {
        ch.eq(
            s.code_type(),
            CodeType::new(3, 6, 0, 2, 0)?,
            "survivor type",
        );
        ch.check(
            arrangement_equivalent(&known, s)?,
            "survivor is an arrangement of the known dual",
        );
        let back = s.dual()?;
        ch.eq(
            back.code_type(),
            CodeType::new(3, 6, 3, 4, 3)?,
            "survivor dual type",
        );
        ch.check(verify::is_perfect(&back)?, "survivor dual is perfect");
        ch.check(verify::is_cyclic(&back)?, "survivor dual is cyclic");
    }
    Ok(())
}

/// Whether some arrangement of `a`'s coordinates turns it into `b`.
/// Exhaustive, so only for small shapes.
fn arrangement_equivalent(a: &Z2Z4Code, b: &Z2Z4Code) -> Result<bool> {
    let space = verify::Arrangement::space(a.alpha(), a.beta());
    for k in 0..space as u64 {
        let pi = verify::Arrangement::at_rank(a.alpha(), a.beta(), k)?;
        if pi.apply_code(a)?.same_code(b)? {
            return Ok(true);
        }
    }
    Ok(false)
}

fn c10_cross_validation(ch: &mut Checks) -> Result<()> {
    let mut state = 0x9e37_79b9_7f4a_7c15u64;
    let mut next = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state
    };
    for case in 0..50 {
        let alpha = (next() % 4 + 1) as usize;
        let beta = (next() % 4 + 1) as usize;
        let rows = (next() % 3 + 1) as usize;
        let mut m = crate::MixedMatrix::new(alpha, beta);
        for _ in 0..rows {
            let bin: Vec<u8> = (0..alpha).map(|_| (next() % 2) as u8).collect();
            let quat: Vec<u8> = (0..beta).map(|_| (next() % 4) as u8).collect();
            m.push(MixedVector::from_symbols(&bin, &quat)?)?;
        }
        let c = Z2Z4Code::from_generators(m)?;
        let tag = format!("case {case} type {}", c.code_type());

        // Two dual constructions, one by scanning the ambient space and
        // one by solving for the kernel, must give the same code.
        let as_code = |gens: Vec<MixedVector>| -> Result<Z2Z4Code> {
            Z2Z4Code::from_generators(crate::MixedMatrix::from_rows(alpha, beta, gens)?)
        };
        let brute = as_code(c.dual_brute_force()?)?;
        let kernel = as_code(c.dual_via_kernel()?)?;
        ch.check(brute.same_code(&kernel)?, &format!("{tag}: dual routes"));

        // Taking the dual twice must come back to the code itself.
        ch.check(
            brute.dual()?.same_code(&c)?,
            &format!("{tag}: double dual"),
        );

        // Membership by syndrome and by enumeration must agree, both on
        // codewords and on arbitrary vectors.
        for _ in 0..30 {
            let bin: Vec<u8> = (0..alpha).map(|_| (next() % 2) as u8).collect();
            let quat: Vec<u8> = (0..beta).map(|_| (next() % 4) as u8).collect();
            let v = MixedVector::from_symbols(&bin, &quat)?;
            ch.eq(
                c.contains_by_syndrome(&v)?,
                c.contains_by_set(&v)?,
                &format!("{tag}: membership of {v}"),
            );
        }

        // Shift closure checked on generators must match the closure of
        // the full codeword set.
        let by_words = c
            .codewords()?
            .iter()
            .try_fold(true, |acc, w| c.contains(&w.shift()).map(|b| acc && b))?;
        ch.eq(
            verify::is_cyclic(&c)?,
            by_words,
            &format!("{tag}: shift closure"),
        );
    }
    Ok(())
}
