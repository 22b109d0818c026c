use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{check_class_condition, CheckLine, ClassCondition, ClassKind, Scale, SuiteReport};
use crate::analysis::{
    affine_decomposition, check_cequal_extension, funop_apply, linear, prefix_vector, recombine, sign_pattern,
    spanning_prefix_set, FunOp, SignPattern,
};
use crate::constructions::*;
use crate::encodings::trans_value;
use crate::families::{machines, Class, Contract, Family};
use crate::machines::random::{
    random_alphabet, random_nfa, random_nfa_over, random_prefix_code, random_homomorphism, random_word, NfaShape,
};
use crate::machines::{Alphabet, Machine, Nfa};
use crate::semantics::{
    count_paths, dpda_run, enumerate_paths, pfa_probabilities, tally_paths, transduce, DpdaVerdict, DEFAULT_STEP_CAP,
};
use crate::{Error, Result};

pub const SUITES: [&str; 5] = ["semantics", "constructions", "families", "analysis", "all"];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuiteOptions {
    pub seed: u64,
    pub scale: Scale,
    /// Adds checks run against deliberately wrong machines; each should fail.
    pub negative_controls: bool,
}

pub fn run_suite(name: &str, seed: u64, scale: Scale) -> Result<SuiteReport> {
    run_suite_with(name, SuiteOptions { seed, scale, negative_controls: false })
}

pub fn run_suite_with(name: &str, opts: SuiteOptions) -> Result<SuiteReport> {
    let parts: &[fn(&Ctx) -> Result<Vec<CheckLine>>] = match name {
        "semantics" => &[semantics],
        "constructions" => &[constructions],
        "families" => &[families],
        "analysis" => &[analysis],
        "all" => &[semantics, constructions, families, analysis],
        _ => return Err(Error::UnknownSuite(name.to_string())),
    };
    let ctx = Ctx { opts };
    let mut report = SuiteReport::new(format!("{name} scale {}", opts.scale), opts.seed);
    for part in parts {
        for line in part(&ctx)? {
            report.push(line);
        }
    }
    Ok(report.finish())
}

struct Ctx {
    opts: SuiteOptions,
}

impl Ctx {
    /// A generator that depends only on the seed and the check id.
    fn rng(&self, id: &str) -> ChaCha8Rng {
        let h = id.bytes().fold(0xcbf2_9ce4_8422_2325u64, |h, b| (h ^ u64::from(b)).wrapping_mul(0x0100_0000_01b3));
        ChaCha8Rng::seed_from_u64(self.opts.seed ^ h)
    }

    fn pick(&self, small: usize, full: usize) -> usize {
        match self.opts.scale {
            Scale::Small => small,
            Scale::Full => full,
        }
    }
}

/// Runs `body` on `count` cases, recording the first failure.
fn cases(id: &str, count: usize, mut body: impl FnMut(usize) -> Result<Option<String>>) -> Result<CheckLine> {
    let mut failures = 0;
    let mut first = String::new();
    for i in 0..count {
        if let Some(msg) = body(i)? {
            if failures == 0 {
                first = msg;
            }
            failures += 1;
        }
    }
    let detail = if failures == 0 { String::new() } else { format!("failures={failures} first: {first}") };
    Ok(CheckLine::new(id, failures == 0, count, detail))
}

fn mismatch<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> Option<String> {
    (got != want).then(|| format!("{what}: got {got:?} want {want:?}"))
}

fn acc(m: &Nfa, x: &str) -> Result<BigUint> {
    Ok(count_paths(m, x)?.accepting)
}

fn gap(m: &Nfa, x: &str) -> Result<BigInt> {
    Ok(count_paths(m, x)?.gap())
}

fn pair(rng: &mut ChaCha8Rng) -> (Nfa, Nfa) {
    let shape = NfaShape::default();
    let a = random_alphabet(rng, shape.max_letters);
    (random_nfa_over(rng, &shape, a.clone()), random_nfa_over(rng, &shape, a))
}

fn semantics(ctx: &Ctx) -> Result<Vec<CheckLine>> {
    let mut out = Vec::new();

    let id = "Semantics.oracle";
    let mut rng = ctx.rng(id);
    let max_len = ctx.pick(4, 5);
    out.push(cases(id, ctx.pick(100, 500), |_| {
        let m = random_nfa(&mut rng, &NfaShape::default());
        for x in m.alphabet().strings_up_to(max_len) {
            let paths = enumerate_paths(&m, &x, 1 << 20)?;
            if let Some(e) = mismatch(&x, count_paths(&m, &x)?, tally_paths(&paths)) {
                return Ok(Some(e));
            }
        }
        Ok(None)
    })?);

    let id = "Semantics.pfa_mass";
    let mut rng = ctx.rng(id);
    out.push(cases(id, ctx.pick(40, 100), |_| {
        let m = random_nfa(&mut rng, &NfaShape::default());
        let p = nfa_to_pfa(&branching_normal_form(&m))?;
        let x = random_word(&mut rng, m.alphabet(), 5);
        let pr = pfa_probabilities(&p, &x)?;
        Ok(mismatch(&x, (&pr.accept + &pr.reject, pr.other.clone()), (BigRational::one(), BigRational::zero())))
    })?);

    let id = "Semantics.transduce";
    let mut rng = ctx.rng(id);
    out.push(cases(id, ctx.pick(50, 200), |_| {
        let a = random_alphabet(&mut rng, 3);
        let x = random_word(&mut rng, &a, 8);
        Ok(mismatch(&x, transduce(&identity_transducer(&a), &x)?, x.clone()))
    })?);

    let id = "Semantics.dpda_turns";
    let d = machines::ldot();
    let xs: Vec<(usize, String)> =
        (1..=ctx.pick(2, 3)).flat_map(|n| Family::Ldot.enumerate(n, usize::MAX).map(move |x| (n, x))).collect();
    out.push(cases(id, xs.len(), |i| {
        let run = dpda_run(&d, &xs[i].1, DEFAULT_STEP_CAP)?;
        Ok(mismatch(&xs[i].1, run.turns, Some(1)))
    })?);
    Ok(out)
}

fn constructions(ctx: &Ctx) -> Result<Vec<CheckLine>> {
    let mut out = Vec::new();
    let count = ctx.pick(60, 200);

    let id = "Bnf.counts";
    let mut rng = ctx.rng(id);
    out.push(cases(id, ctx.pick(40, 100), |_| {
        let m = random_nfa(&mut rng, &NfaShape::default());
        let nf = branching_normal_form(&m);
        if nf.machine.num_states() > 3 * m.num_states() + nf.degree + 2 {
            return Ok(Some(format!("size {} for sc {}", nf.machine.num_states(), m.num_states())));
        }
        for x in m.alphabet().strings_up_to(3) {
            let c = count_paths(&nf.machine, &x)?;
            let total = BigUint::from(nf.degree).pow(x.len() as u32 + 2);
            let want = (acc(&m, &x)?, total, BigUint::zero());
            if let Some(e) = mismatch(&x, (c.accepting.clone(), &c.accepting + &c.rejecting, c.improper), want) {
                return Ok(Some(e));
            }
        }
        Ok(None)
    })?);

    let id = "Cequal.square";
    let mut rng = ctx.rng(id);
    out.push(cases(id, count, |_| {
        let m = random_nfa(&mut rng, &NfaShape::default());
        let x = random_word(&mut rng, m.alphabet(), 5);
        let g = gap(&m, &x)?;
        let sq = square_gap(&m);
        if sq.num_states() > m.num_states().pow(2) + 2 {
            return Ok(Some(format!("size {}", sq.num_states())));
        }
        Ok(mismatch(&x, gap(&sq, &x)?, &g * &g))
    })?);

    type PairCheck = fn(&Nfa, &Nfa, &str) -> Result<Option<String>>;
    let pair_checks: [(&str, PairCheck); 6] = [
        ("Closure.sum", |a, b, x| {
            let (ca, cb) = (count_paths(a, x)?, count_paths(b, x)?);
            let s = count_paths(&disjoint_sum(a, b)?, x)?;
            Ok(mismatch(x, (s.accepting, s.rejecting), (ca.accepting + cb.accepting, ca.rejecting + cb.rejecting)))
        }),
        ("Closure.product", |a, b, x| Ok(mismatch(x, acc(&sync_product(a, b)?, x)?, acc(a, x)? * acc(b, x)?))),
        ("Gap.sum", |a, b, x| Ok(mismatch(x, gap(&gap_sum(a, b)?, x)?, gap(a, x)? + gap(b, x)?))),
        ("Gap.product", |a, b, x| Ok(mismatch(x, gap(&gap_product(a, b)?, x)?, gap(a, x)? * gap(b, x)?))),
        ("Gap.difference", |a, b, x| {
            let want = BigInt::from(acc(a, x)?) - BigInt::from(acc(b, x)?);
            Ok(mismatch(x, gap(&gap_of_difference(a, b)?, x)?, want))
        }),
        ("Cequal.meet", |a, b, x| {
            let (ca, cb) = (count_paths(a, x)?, count_paths(b, x)?);
            let mixed = &ca.accepting * &cb.rejecting + &ca.rejecting * &cb.accepting;
            let c = count_paths(&meet_cequal(a, b)?, x)?;
            let want = (&ca.accepting * &cb.accepting + &mixed, &ca.rejecting * &cb.rejecting + &mixed);
            Ok(mismatch(x, (c.accepting, c.rejecting), want))
        }),
    ];
    for (id, check) in pair_checks {
        let mut rng = ctx.rng(id);
        out.push(cases(id, count, |_| {
            let (a, b) = pair(&mut rng);
            let x = random_word(&mut rng, a.alphabet(), 4);
            check(&a, &b, &x)
        })?);
    }

    let id = "Gap.complement";
    let mut rng = ctx.rng(id);
    out.push(cases(id, count, |_| {
        let m = random_nfa(&mut rng, &NfaShape::default());
        let x = random_word(&mut rng, m.alphabet(), 5);
        Ok(mismatch(&x, gap(&complement_gapwise(&m), &x)?, BigInt::one() - gap(&m, &x)?))
    })?);

    let id = "Nvscequal.split";
    let mut rng = ctx.rng(id);
    out.push(cases(id, count, |_| {
        let m = random_nfa(&mut rng, &NfaShape::default());
        let x = random_word(&mut rng, m.alphabet(), 5);
        Ok(mismatch(&x, gap(&split_rejecting(&m), &x)?, BigInt::from(acc(&m, &x)?)))
    })?);
    if ctx.opts.negative_controls {
        let id = "Control.Nvscequal.split";
        let mut rng = ctx.rng(id);
        out.push(cases(id, count, |_| {
            let m = random_nfa(&mut rng, &NfaShape::default());
            let x = random_word(&mut rng, m.alphabet(), 5);
            Ok(mismatch(&x, gap(&split_rejecting(&flip(&m)), &x)?, BigInt::from(acc(&m, &x)?)))
        })?);
    }

    let id = "Pfa.bridge";
    let mut rng = ctx.rng(id);
    out.push(cases(id, ctx.pick(40, 100), |_| {
        let m = random_nfa(&mut rng, &NfaShape::default());
        let nf = branching_normal_form(&m);
        let p = nfa_to_pfa(&nf)?;
        let x = random_word(&mut rng, m.alphabet(), 4);
        let want = BigRational::new(acc(&m, &x)?.into(), BigInt::from(nf.degree).pow(x.len() as u32 + 2));
        Ok(mismatch(&x, pfa_probabilities(&p, &x)?.accept, want))
    })?);

    let bits = Alphabet::of("01").expect("static alphabet");
    let id_t = identity_transducer(&bits);
    let (counter, signed) = (counter_from_transducer(&id_t)?, gap_from_transducer(&id_t)?);
    let words = bits.strings_up_to(ctx.pick(5, 6));
    let id = "Trans.counter";
    out.push(cases(id, words.len(), |i| {
        let x = format!("1{}", words[i]);
        Ok(mismatch(&x, BigInt::from(acc(&counter, &x)?), trans_value(&x)?))
    })?);
    let id = "Trans.gap";
    out.push(cases(id, 2 * words.len(), |i| {
        let x = format!("{}{}", i % 2, words[i / 2]);
        Ok(mismatch(&x, gap(&signed, &x)?, trans_value(&x)?))
    })?);

    let id = "Hom.image";
    let mut rng = ctx.rng(id);
    out.push(cases(id, ctx.pick(40, 100), |_| {
        let m = random_nfa(&mut rng, &NfaShape::default());
        let dom = Alphabet::of("xy").expect("static alphabet");
        let h = random_homomorphism(&mut rng, &dom, m.alphabet().letters(), 3);
        let x = random_word(&mut rng, &dom, 3);
        Ok(mismatch(&x, acc(&hom_image(&m, &h)?, &x)?, acc(&m, &h.apply(&x)?)?))
    })?);

    let id = "Hom.inverse";
    let mut rng = ctx.rng(id);
    out.push(cases(id, ctx.pick(40, 100), |_| {
        let m = random_nfa(&mut rng, &NfaShape::default());
        let h = random_prefix_code(&mut rng, m.alphabet());
        let inv = hom_inverse(&m, &h)?;
        if inv.num_states() > m.num_states() * h.total_length() {
            return Ok(Some(format!("size {}", inv.num_states())));
        }
        let x = random_word(&mut rng, m.alphabet(), 4);
        Ok(mismatch(&x, acc(&inv, &h.apply(&x)?)?, acc(&m, &x)?))
    })?);
    Ok(out)
}

/// Largest `n` at which each family's contract is checked.
fn family_range(f: Family, scale: Scale) -> (usize, usize) {
    let full = scale == Scale::Full;
    match f {
        Family::Example31 => (3, if full { 9 } else { 7 }),
        Family::Lsp => (1, if full { 9 } else { 7 }),
        Family::LU => (if full { 3 } else { 2 }, usize::MAX),
        Family::LN => (2, usize::MAX),
        Family::Lparity => (if full { 4 } else { 3 }, usize::MAX),
        Family::Ldot => (3, usize::MAX),
        Family::LblockU => (0, 0),
    }
}

fn families(ctx: &Ctx) -> Result<Vec<CheckLine>> {
    let mut out = Vec::new();
    for f in Family::ALL.into_iter().filter(|f| f.has_machine()) {
        let (top, max_len) = family_range(f, ctx.opts.scale);
        let mut xs = Vec::new();
        for n in 1..=top {
            xs.extend(f.enumerate(n, max_len).map(|x| (n, x)));
        }
        let built: Vec<Machine> = (1..=top).map(|n| f.build_machine(n)).collect::<Result<_>>()?;
        out.push(cases(&format!("Family.{f}.contract"), xs.len(), |i| {
            let (n, x) = &xs[i];
            let m = &built[n - 1];
            let want = f.contract_value(*n, x);
            let got = match f.contract() {
                Contract::Accepting => Some(BigInt::from(acc(m.as_nfa()?, x)?)),
                Contract::Gap => Some(gap(m.as_nfa()?, x)?),
                Contract::Verdict => match dpda_run(m.as_dpda()?, x, DEFAULT_STEP_CAP)?.verdict {
                    DpdaVerdict::Accept => Some(BigInt::one()),
                    DpdaVerdict::Reject => Some(BigInt::zero()),
                    _ => None,
                },
                Contract::None => None,
            };
            Ok(mismatch(x, got, want))
        })?);
        let (c, k) = f.size_bound().expect("families with machines have bounds");
        out.push(cases(&format!("Family.{f}.size"), 5, |i| {
            let n = i + 1;
            let sc = crate::machines::state_complexity(&f.build_machine(n)?);
            Ok((sc > c * n.pow(k)).then(|| format!("n={n}: {sc} > {c}*n^{k}")))
        })?);
    }

    let lsp_ceq: Machine = machines::lsp_cequal().into();
    let mut conditions: Vec<(ClassCondition, Machine, Family, usize, usize)> = vec![
        (ClassCondition::new(ClassKind::OneN), Family::Example31.build_machine(2)?, Family::Example31, 2, 7),
        (ClassCondition::new(ClassKind::OneSP), Family::Lsp.build_machine(1)?, Family::Lsp, 1, 7),
        (ClassCondition::new(ClassKind::OneCeq), lsp_ceq, Family::Lsp, 1, 7),
        (ClassCondition::new(ClassKind::OneU), Family::LU.build_machine(2)?, Family::LU, 2, usize::MAX),
        (ClassCondition::new(ClassKind::OneN), Family::LN.build_machine(2)?, Family::LN, 2, usize::MAX),
    ];
    let lu2 = Family::LU.build_machine(2)?;
    conditions.push((
        ClassCondition::new(ClassKind::OneSP),
        split_rejecting(lu2.as_nfa()?).into(),
        Family::LU,
        2,
        usize::MAX,
    ));
    for n in 1..=2 {
        for f in [Family::LN, Family::LU, Family::Example31] {
            let m = f.build_machine(n)?;
            let split: Machine = split_rejecting(m.as_nfa()?).into();
            conditions.push((ClassCondition::co(ClassKind::OneCeq), split, f, n, 7.max(f.instance_length(n).unwrap_or(0))));
        }
    }
    for n in [2, ctx.pick(3, 4)] {
        conditions.push((
            ClassCondition::new(ClassKind::OneParity),
            Family::Lparity.build_machine(n)?,
            Family::Lparity,
            n,
            usize::MAX,
        ));
    }
    if ctx.opts.negative_controls {
        conditions.push((ClassCondition::new(ClassKind::OneU), Family::LN.build_machine(2)?, Family::LN, 2, usize::MAX));
    }
    for (cond, m, f, n, max_len) in conditions {
        let r = check_class_condition(cond, &m, f, n, max_len)?;
        for mut line in r.checks {
            let control = ctx.opts.negative_controls && cond.class == ClassKind::OneU && f == Family::LN;
            line.id = format!("{}Class.{}", if control { "Control." } else { "" }, line.id);
            out.push(line);
        }
    }
    Ok(out)
}

/// The probabilistic machine derived from the `L_sp` gap machine with one
/// extra rejecting path: acceptance probability `1/2` exactly on positive
/// instances.
pub(crate) fn lsp_pfa() -> Result<crate::machines::Pfa> {
    nfa_to_pfa(&gap_normal_form(&machines::lsp_cequal()))
}

fn analysis(ctx: &Ctx) -> Result<Vec<CheckLine>> {
    let mut out = Vec::new();

    let id = "Span.rank";
    let mut rng = ctx.rng(id);
    out.push(cases(id, ctx.pick(20, 100), |_| {
        let m = random_nfa(&mut rng, &NfaShape::default());
        let p = nfa_to_pfa(&branching_normal_form(&m))?;
        let prefixes = p.alphabet().strings_up_to(3);
        let s = spanning_prefix_set(&p, &prefixes)?;
        let all: Vec<_> = prefixes.iter().map(|w| prefix_vector(&p, w).map(|v| v.vector)).collect::<Result<_>>()?;
        Ok(mismatch("rank", (s.len(), s.len() <= p.num_states()), (linear::rank(&all), true)))
    })?);

    let id = "Span.affine";
    let mut rng = ctx.rng(id);
    out.push(cases(id, ctx.pick(20, 100), |_| {
        let m = random_nfa(&mut rng, &NfaShape::default());
        let p = nfa_to_pfa(&branching_normal_form(&m))?;
        let prefixes = p.alphabet().strings_up_to(3);
        let s = spanning_prefix_set(&p, &prefixes)?;
        for w in &prefixes {
            let d = affine_decomposition(&p, &s, w)?;
            let back = recombine(&s, &d.coefficients);
            if let Some(e) = mismatch(w, (back, d.sum), (prefix_vector(&p, w)?.vector, BigRational::one())) {
                return Ok(Some(e));
            }
        }
        Ok(None)
    })?);

    let p = lsp_pfa()?;
    let id = "Pfa.half";
    let xs: Vec<String> = Family::Lsp.enumerate(1, ctx.pick(6, 8)).collect();
    out.push(cases(id, xs.len(), |i| {
        let half = pfa_probabilities(&p, &xs[i])?.accept == BigRational::new(1.into(), 2.into());
        Ok(mismatch(&xs[i], half, Family::Lsp.classify(1, &xs[i]) == Class::Positive))
    })?);

    let id = "Cequal.extension";
    let mut runs = Vec::new();
    for n in 1..=3 {
        for l in 1..=ctx.pick(3, 4) {
            for z in Family::Lsp.alphabet().words(l) {
                runs.push((n, l + 3, l, z));
            }
        }
    }
    out.push(cases(id, runs.len(), |i| {
        let (n, m, l, z) = &runs[i];
        let r = check_cequal_extension(&p, Family::Lsp, *n, *m, *l, z)?;
        Ok((!r.passed() || !r.alpha_sums_one).then(|| format!("n={n} m={m} z={z}: {} violations", r.violation_count)))
    })?);
    if ctx.opts.negative_controls {
        // the Lsp machine is no witness for LN, so the implication must break
        out.push(cases("Control.Cequal.extension", 1, |_| {
            let r = check_cequal_extension(&p, Family::LN, 2, 19, 9, "110001100")?;
            Ok((!r.passed()).then(|| format!("{} violations", r.violation_count)))
        })?);
    }

    let id = "Onep.signs";
    out.push(cases(id, 2, |i| {
        let n = 2 * (i + 1);
        let blocks: Vec<String> = Family::Lparity.enumerate(n, usize::MAX).map(|x| x.split('#').next().unwrap_or_default().to_string()).collect::<BTreeSet<_>>().into_iter().collect();
        let s: Vec<String> = blocks.iter().map(|u| format!("{u}#")).collect();
        let classify = |x: &str| Family::Lparity.classify(n, x);
        let via_patterns: BTreeSet<SignPattern> = blocks.iter().map(|y| sign_pattern(classify, &s, y)).collect();
        let brute: BTreeSet<String> = blocks
            .iter()
            .map(|y| {
                blocks
                    .iter()
                    .map(|u| {
                        let ones = u.bytes().zip(y.bytes()).filter(|&(a, b)| a == b'1' && b == b'1').count();
                        if ones % 2 == 1 { '1' } else { '0' }
                    })
                    .collect()
            })
            .collect();
        let brute: BTreeSet<SignPattern> = brute.into_iter().map(SignPattern::Bits).collect();
        Ok(mismatch(&format!("n={n}"), via_patterns, brute))
    })?);

    let id = "Funop.oracle";
    let mut rng = ctx.rng(id);
    out.push(cases(id, ctx.pick(1000, 10_000), |_| {
        let op = FunOp::ALL[rng.gen_range(0..FunOp::ALL.len())];
        let (a, b): (i64, i64) = (rng.gen_range(-1 << 40..1 << 40), rng.gen_range(-1 << 20..1 << 20));
        let got = funop_apply(op, &a.into(), Some(&b.into()));
        Ok(mismatch(&format!("{op} {a} {b}"), got, reference(op, a.into(), b.into())))
    })?);
    Ok(out)
}

/// Plain `i128` arithmetic for the same operations.
pub(crate) fn reference(op: FunOp, a: i128, b: i128) -> Result<BigInt> {
    let floor_div = |a: i128, b: i128| {
        let q = a / b;
        if a % b != 0 && ((a < 0) != (b < 0)) {
            q - 1
        } else {
            q
        }
    };
    let v = match op {
        FunOp::Add => a + b,
        FunOp::Mul => a * b,
        FunOp::ProperSub => (a - b).max(0),
        FunOp::IntDiv if b == 0 => return Err(Error::DivisionByZero),
        FunOp::IntDiv => floor_div(a, b),
        FunOp::Dec1 => (a - 1).max(0),
        FunOp::Half => floor_div(a, 2),
        FunOp::Max => a.max(b),
        FunOp::Min => a.min(b),
    };
    Ok(v.into())
}
