use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use counting_automata::analysis::{
    check_cequal_extension, funop_apply, linear, prefix_vector, sign_pattern, spanning_prefix_set, FunOp,
};
use counting_automata::constructions::*;
use counting_automata::families::Family;
use counting_automata::harness::{run_suite_with, Scale, SuiteOptions};
use counting_automata::machines::format::{parse_machine, serialize_machine};
use counting_automata::machines::{Machine, Pfa};
use counting_automata::semantics::{count_paths, dpda_run, pfa_probabilities, transduce, DEFAULT_STEP_CAP};
use counting_automata::{Error, Result};

/// Counting and gap semantics of one-way finite automata.
#[derive(Parser)]
#[command(name = "cfa", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Run {
    #[arg(long)]
    machine: PathBuf,
    #[arg(long, default_value = "")]
    input: String,
}

#[derive(Subcommand)]
enum Command {
    /// Accepting, rejecting and improper path counts (or a pushdown/transducer run).
    Count(Run),
    /// Accepting minus rejecting paths.
    Gap(Run),
    /// Exact acceptance and rejection probabilities.
    Pfa(Run),
    /// Applies a construction to machine files.
    Construct {
        op: Op,
        inputs: Vec<PathBuf>,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Branching degree for `normal-form`.
        #[arg(long)]
        degree: Option<usize>,
        /// Letter images such as `a=01,b=1` for the homomorphism operations.
        #[arg(long)]
        hom: Option<String>,
    },
    Family {
        #[command(subcommand)]
        action: FamilyAction,
    },
    Analyze {
        #[command(subcommand)]
        action: AnalyzeAction,
    },
    /// Runs a verification suite.
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value = "small")]
        scale: String,
        /// Also run checks on deliberately wrong machines; these should fail.
        #[arg(long)]
        controls: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Op {
    NormalForm,
    GapNormalForm,
    Pfa,
    Flip,
    Split,
    Complete,
    Sum,
    Product,
    Meet,
    Square,
    Complement,
    Difference,
    GapSum,
    GapProduct,
    Counter,
    GapTransducer,
    HomImage,
    HomInverse,
}

#[derive(Args)]
struct Which {
    #[arg(long)]
    name: String,
    #[arg(long)]
    n: usize,
}

#[derive(Subcommand)]
enum FamilyAction {
    /// Lists valid strings, shortest first.
    Gen {
        #[command(flatten)]
        which: Which,
        #[arg(long, default_value_t = 8)]
        max_len: usize,
    },
    Classify {
        #[command(flatten)]
        which: Which,
        #[arg(long)]
        input: String,
    },
    /// Writes the witness machine.
    Machine {
        #[command(flatten)]
        which: Which,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum AnalyzeAction {
    /// Greedy spanning subset of prefix vectors. An nfa is first put in
    /// branching normal form.
    Span {
        #[arg(long)]
        machine: PathBuf,
        /// Comma-separated prefixes; defaults to every string up to `--max-len`.
        #[arg(long)]
        prefixes: Option<String>,
        #[arg(long, default_value_t = 3)]
        max_len: usize,
    },
    /// Checks the extension property over `A = {x : xz positive}`. An nfa is
    /// read as a gap machine: acceptance probability 1/2 iff gap 0.
    CequalExtension {
        #[arg(long)]
        machine: PathBuf,
        #[command(flatten)]
        which: Which,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        l: usize,
        #[arg(long, default_value = "")]
        z: String,
    },
    SignPattern {
        #[command(flatten)]
        which: Which,
        /// Comma-separated prefixes `w_1,...,w_p`.
        #[arg(long)]
        prefixes: String,
        #[arg(long, default_value = "")]
        suffix: String,
    },
    Funop {
        op: String,
        a: BigInt,
        b: Option<BigInt>,
    },
}

fn load(path: &Path) -> Result<Machine> {
    let text = fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_machine(&text)
}

fn emit(text: &str, output: Option<&Path>) -> Result<()> {
    match output {
        Some(p) => fs::write(p, text).map_err(|e| Error::Io(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn list(s: &str) -> Vec<String> {
    if s.is_empty() {
        vec![]
    } else {
        s.split(',').map(str::to_string).collect()
    }
}

fn parse_hom(spec: Option<&str>) -> Result<Homomorphism> {
    let spec = spec.ok_or_else(|| Error::Homomorphism("--hom is required".into()))?;
    let pairs = spec
        .split(',')
        .map(|p| {
            let (l, r) = p.split_once('=').ok_or_else(|| Error::Homomorphism(format!("expected letter=image, got {p:?}")))?;
            let mut cs = l.chars();
            match (cs.next(), cs.next()) {
                (Some(c), None) => Ok((c, r.to_string())),
                _ => Err(Error::Homomorphism(format!("expected one letter, got {l:?}"))),
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Homomorphism::new(pairs)
}

fn as_pfa(m: Machine, gap_reading: bool) -> Result<Pfa> {
    match m {
        Machine::Pfa(p) => Ok(p),
        other => {
            let nfa = other.as_nfa()?;
            let nf = if gap_reading { gap_normal_form(nfa) } else { branching_normal_form(nfa) };
            nfa_to_pfa(&nf)
        }
    }
}

fn construct(op: Op, inputs: &[PathBuf], degree: Option<usize>, hom: Option<&str>) -> Result<Machine> {
    let machines = inputs.iter().map(|p| load(p)).collect::<Result<Vec<_>>>()?;
    let want = |k: usize| {
        if machines.len() == k {
            Ok(())
        } else {
            Err(Error::Range(format!("expected {k} input machine(s), got {}", machines.len())))
        }
    };
    let unary = matches!(
        op,
        Op::NormalForm
            | Op::GapNormalForm
            | Op::Pfa
            | Op::Flip
            | Op::Split
            | Op::Complete
            | Op::Square
            | Op::Complement
            | Op::Counter
            | Op::GapTransducer
            | Op::HomImage
            | Op::HomInverse
    );
    want(if unary { 1 } else { 2 })?;
    let m = &machines[0];
    let binary = |f: fn(&_, &_) -> Result<_>| f(m.as_nfa()?, machines[1].as_nfa()?);
    Ok(match op {
        Op::NormalForm => match degree {
            Some(c) => with_degree(m.as_nfa()?, c)?.machine.into(),
            None => branching_normal_form(m.as_nfa()?).machine.into(),
        },
        Op::GapNormalForm => gap_normal_form(m.as_nfa()?).machine.into(),
        Op::Pfa => as_pfa(m.clone(), false)?.into(),
        Op::Flip => flip(m.as_nfa()?).into(),
        Op::Split => split_rejecting(m.as_nfa()?).into(),
        Op::Complete => complete_paths(m.as_nfa()?).into(),
        Op::Square => square_gap(m.as_nfa()?).into(),
        Op::Complement => complement_gapwise(m.as_nfa()?).into(),
        Op::Sum => binary(disjoint_sum)?.into(),
        Op::Product => binary(sync_product)?.into(),
        Op::Meet => binary(meet_cequal)?.into(),
        Op::Difference => binary(gap_of_difference)?.into(),
        Op::GapSum => binary(gap_sum)?.into(),
        Op::GapProduct => binary(gap_product)?.into(),
        Op::Counter => counter_from_transducer(m.as_dft()?)?.into(),
        Op::GapTransducer => gap_from_transducer(m.as_dft()?)?.into(),
        Op::HomImage => hom_image(m.as_nfa()?, &parse_hom(hom)?)?.into(),
        Op::HomInverse => hom_inverse(m.as_nfa()?, &parse_hom(hom)?)?.into(),
    })
}

/// Runs a command; `Ok(false)` means a check failed.
fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Count(r) => match load(&r.machine)? {
            Machine::Dpda(d) => {
                let o = dpda_run(&d, &r.input, DEFAULT_STEP_CAP)?;
                let turns = o.turns.map_or("-".to_string(), |t| t.to_string());
                println!("verdict={:?} steps={} turns={turns} max_height={}", o.verdict, o.steps, o.max_height);
            }
            Machine::Dft(t) => println!("output={}", transduce(&t, &r.input)?),
            Machine::Pfa(p) => print_pfa(&p, &r.input)?,
            m => {
                let c = count_paths(m.as_nfa()?, &r.input)?;
                println!("accepting={} rejecting={} improper={}", c.accepting, c.rejecting, c.improper);
            }
        },
        Command::Gap(r) => println!("{}", count_paths(load(&r.machine)?.as_nfa()?, &r.input)?.gap()),
        Command::Pfa(r) => print_pfa(&as_pfa(load(&r.machine)?, false)?, &r.input)?,
        Command::Construct { op, inputs, output, degree, hom } => {
            let m = construct(op, &inputs, degree, hom.as_deref())?;
            emit(&serialize_machine(&m), output.as_deref())?;
        }
        Command::Family { action } => family(action)?,
        Command::Analyze { action } => return analyze(action),
        Command::Verify { suite, seed, scale, controls } => {
            let scale: Scale = scale.parse()?;
            let report = run_suite_with(&suite, SuiteOptions { seed, scale, negative_controls: controls })?;
            println!("{report}");
            return Ok(report.passed());
        }
    }
    Ok(true)
}

fn print_pfa(p: &Pfa, x: &str) -> Result<()> {
    let pr = pfa_probabilities(p, x)?;
    println!("accept={} reject={} other={}", pr.accept, pr.reject, pr.other);
    Ok(())
}

fn family(action: FamilyAction) -> Result<()> {
    match action {
        FamilyAction::Gen { which, max_len } => {
            for x in Family::by_name(&which.name)?.enumerate(which.n, max_len) {
                println!("{x}");
            }
        }
        FamilyAction::Classify { which, input } => {
            println!("{:?}", Family::by_name(&which.name)?.classify(which.n, &input));
        }
        FamilyAction::Machine { which, output } => {
            let m = Family::by_name(&which.name)?.build_machine(which.n)?;
            emit(&serialize_machine(&m), output.as_deref())?;
        }
    }
    Ok(())
}

fn analyze(action: AnalyzeAction) -> Result<bool> {
    match action {
        AnalyzeAction::Span { machine, prefixes, max_len } => {
            let p = as_pfa(load(&machine)?, false)?;
            let prefixes = match prefixes {
                Some(s) => list(&s),
                None => p.alphabet().strings_up_to(max_len),
            };
            let s = spanning_prefix_set(&p, &prefixes)?;
            let all = prefixes.iter().map(|w| prefix_vector(&p, w).map(|v| v.vector)).collect::<Result<Vec<_>>>()?;
            println!("prefixes={} states={} rank={}", prefixes.len(), p.num_states(), linear::rank(&all));
            for pv in &s {
                println!("span {:?}", pv.prefix);
            }
            Ok(s.len() <= p.num_states())
        }
        AnalyzeAction::CequalExtension { machine, which, m, l, z } => {
            let p = as_pfa(load(&machine)?, true)?;
            let r = check_cequal_extension(&p, Family::by_name(&which.name)?, which.n, m, l, &z)?;
            println!("{r}");
            Ok(r.passed())
        }
        AnalyzeAction::SignPattern { which, prefixes, suffix } => {
            let f = Family::by_name(&which.name)?;
            println!("{}", sign_pattern(|x| f.classify(which.n, x), &list(&prefixes), &suffix));
            Ok(true)
        }
        AnalyzeAction::Funop { op, a, b } => {
            let op: FunOp = op.parse()?;
            println!("{}", funop_apply(op, &a, b.as_ref())?);
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
