//! `mpx` — exact decision queries for mean-payoff automaton expressions.
//!
//! Queries print machine-readable lines on stdout (`result <p/q>`,
//! `verdict <true|false>`, `piece <index>`, `scc <id>`, `prefix <symbols>`)
//! and diagnostics on stderr. Exit codes: 0 = query answered, 2 = input
//! error, 3 = a resource cap was exceeded.

use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use mpx_core::engine::{self, EngineOptions, LassoWord};
use mpx_core::{Error, Expression, Rational, Workspace};

const USAGE: &str = "\
usage: mpx <command> [flags]

commands:
  maxvalue    -a DIR -e FILE              exact maximum value
  empty       -a DIR -e FILE --nu P/Q    verdict true iff some word reaches nu
  universal   -a DIR -e FILE --nu P/Q    verdict true iff every word reaches nu
  includes    -a DIR -e FILE -e2 FILE    verdict true iff e <= e2 pointwise
  equiv       -a DIR -e FILE -e2 FILE    verdict true iff e and e2 agree everywhere
  distance    -a DIR -e FILE -e2 FILE    sup over words of |e - e2|
  eval-lasso  -a DIR -e FILE --v SYMS [--u SYMS]   exact value on u.v^omega
  witness     -a DIR -e FILE [--epsilon P/Q] [--prefix N]   near-optimal word prefix
  validate    -a DIR [-e FILE] [-e2 FILE]          check inputs and summarize

flags:
  -a DIR             directory of .aut automaton files
  -e FILE            expression file
  -e2 FILE           second expression file
  --nu P/Q           query threshold
  --epsilon P/Q      witness slack (default 1/100)
  --prefix N         witness prefix length (default 32)
  --u SYMS           lasso prefix, whitespace-separated symbols
  --v SYMS           lasso cycle, whitespace-separated symbols
  --cycle-cap N      simple-cycle enumeration cap (default 100000)
  --piece-cap N      MAX-split piece cap (default 4096)
  --oracle           use cycle enumeration instead of circulations
  --dump-constraints render every constraint system before solving
";

struct Args {
    command: String,
    automata_dir: Option<PathBuf>,
    expr: Option<PathBuf>,
    expr2: Option<PathBuf>,
    nu: Option<Rational>,
    epsilon: Rational,
    prefix: usize,
    lasso_u: String,
    lasso_v: Option<String>,
    opts: EngineOptions,
    dump: bool,
}

fn parse_args(argv: &[String]) -> Result<Args, String> {
    let mut it = argv.iter();
    let command = it.next().ok_or("missing command")?.clone();
    let mut args = Args {
        command,
        automata_dir: None,
        expr: None,
        expr2: None,
        nu: None,
        epsilon: Rational::new(1, 100).unwrap(),
        prefix: 32,
        lasso_u: String::new(),
        lasso_v: None,
        opts: EngineOptions::default(),
        dump: false,
    };
    while let Some(flag) = it.next() {
        let mut value = || {
            it.next()
                .map(|s| s.to_string())
                .ok_or_else(|| format!("flag `{flag}` expects a value"))
        };
        match flag.as_str() {
            "-a" => args.automata_dir = Some(PathBuf::from(value()?)),
            "-e" => args.expr = Some(PathBuf::from(value()?)),
            "-e2" => args.expr2 = Some(PathBuf::from(value()?)),
            "--nu" => {
                args.nu = Some(
                    Rational::from_str(&value()?).map_err(|e| format!("bad --nu: {e}"))?,
                )
            }
            "--epsilon" => {
                let eps =
                    Rational::from_str(&value()?).map_err(|e| format!("bad --epsilon: {e}"))?;
                if !eps.is_positive() {
                    return Err("--epsilon must be positive".into());
                }
                args.epsilon = eps;
            }
            "--prefix" => {
                args.prefix = value()?
                    .parse()
                    .map_err(|e| format!("bad --prefix: {e}"))?
            }
            "--cycle-cap" => {
                args.opts.cycle_cap = value()?
                    .parse()
                    .map_err(|e| format!("bad --cycle-cap: {e}"))?
            }
            "--piece-cap" => {
                args.opts.piece_cap = value()?
                    .parse()
                    .map_err(|e| format!("bad --piece-cap: {e}"))?
            }
            "--u" => args.lasso_u = value()?,
            "--v" => args.lasso_v = Some(value()?),
            "--oracle" => args.opts.use_oracle = true,
            "--dump-constraints" => args.dump = true,
            other => return Err(format!("unknown flag `{other}`")),
        }
    }
    Ok(args)
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().skip(1).collect();
    let args = match parse_args(&argv) {
        Ok(args) => args,
        Err(message) => {
            eprintln!("error: {message}");
            eprint!("{USAGE}");
            return ExitCode::from(2);
        }
    };
    match run(&args) {
        Ok(()) => ExitCode::SUCCESS,
        Err(RunError::Usage(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
        Err(RunError::Core(e)) => {
            eprintln!("error: {e}");
            if e.is_cap_exhaustion() {
                ExitCode::from(3)
            } else {
                ExitCode::from(2)
            }
        }
    }
}

enum RunError {
    Usage(String),
    Core(Error),
}

impl From<Error> for RunError {
    fn from(e: Error) -> Self {
        RunError::Core(e)
    }
}

fn run(args: &Args) -> Result<(), RunError> {
    let need = |opt: &Option<PathBuf>, what: &str| -> Result<PathBuf, RunError> {
        opt.clone()
            .ok_or_else(|| RunError::Usage(format!("`{}` requires {what}", args.command)))
    };
    let workspace = || -> Result<Workspace, RunError> {
        Ok(Workspace::load_dir(&need(&args.automata_dir, "-a DIR")?)?)
    };
    let load_expr = |ws: &Workspace, path: &Option<PathBuf>| -> Result<Expression, RunError> {
        Ok(ws.parse_expression_file(&need(path, "an expression file")?)?)
    };
    let need_nu = || -> Result<Rational, RunError> {
        args.nu
            .clone()
            .ok_or_else(|| RunError::Usage(format!("`{}` requires --nu P/Q", args.command)))
    };
    let maybe_dump = |e: &Expression| -> Result<(), RunError> {
        if args.dump {
            print!("{}", engine::dump_constraints(e, &args.opts)?);
        }
        Ok(())
    };

    match args.command.as_str() {
        "maxvalue" => {
            let ws = workspace()?;
            let e = load_expr(&ws, &args.expr)?;
            maybe_dump(&e)?;
            let mv = engine::max_value(&e, &args.opts)?;
            println!("result {}", mv.value);
            println!("piece {}", mv.attribution.piece);
            println!("scc {}", mv.attribution.scc);
        }
        "empty" => {
            let ws = workspace()?;
            let e = load_expr(&ws, &args.expr)?;
            maybe_dump(&e)?;
            let v = engine::is_empty(&e, &need_nu()?, &args.opts)?;
            print_verdict(&v);
        }
        "universal" => {
            let ws = workspace()?;
            let e = load_expr(&ws, &args.expr)?;
            maybe_dump(&e)?;
            let v = engine::is_universal(&e, &need_nu()?, &args.opts)?;
            print_verdict(&v);
        }
        "includes" => {
            let ws = workspace()?;
            let e1 = load_expr(&ws, &args.expr)?;
            let e2 = load_expr(&ws, &args.expr2)?;
            let v = engine::includes(&e1, &e2, &args.opts)?;
            print_verdict(&v);
        }
        "equiv" => {
            let ws = workspace()?;
            let e1 = load_expr(&ws, &args.expr)?;
            let e2 = load_expr(&ws, &args.expr2)?;
            let v = engine::equivalent(&e1, &e2, &args.opts)?;
            print_verdict(&v);
        }
        "distance" => {
            let ws = workspace()?;
            let e1 = load_expr(&ws, &args.expr)?;
            let e2 = load_expr(&ws, &args.expr2)?;
            let mv = engine::distance(&e1, &e2, &args.opts)?;
            println!("result {}", mv.value);
            println!("piece {}", mv.attribution.piece);
            println!("scc {}", mv.attribution.scc);
        }
        "eval-lasso" => {
            let ws = workspace()?;
            let e = load_expr(&ws, &args.expr)?;
            let v_part = args
                .lasso_v
                .clone()
                .ok_or_else(|| RunError::Usage("`eval-lasso` requires --v SYMS".into()))?;
            let word = LassoWord::parse(&args.lasso_u, &v_part, e.alphabet())
                .map_err(|err| RunError::Usage(err.to_string()))?;
            let value = engine::evaluate_lasso(&e, &word).map_err(Error::from)?;
            println!("result {value}");
        }
        "witness" => {
            let ws = workspace()?;
            let e = load_expr(&ws, &args.expr)?;
            maybe_dump(&e)?;
            let (mv, schedule) = engine::witness_for(&e, &args.epsilon, &args.opts)?;
            println!("result {}", mv.value);
            println!("piece {}", mv.attribution.piece);
            println!("scc {}", mv.attribution.scc);
            println!("prefix {}", schedule.emit_prefix(args.prefix).join(" "));
        }
        "validate" => {
            let ws = workspace()?;
            for name in ws.names() {
                let a = ws.get(&name).unwrap();
                println!(
                    "automaton {name} states {} symbols {}",
                    a.states.len(),
                    a.alphabet.len()
                );
            }
            for path in [&args.expr, &args.expr2].into_iter().flatten() {
                let e = ws.parse_expression_file(path)?;
                let pieces = e.split_max(args.opts.piece_cap).map_err(Error::from)?;
                println!(
                    "expression {} atoms {} pieces {}",
                    path.display(),
                    expression_atom_count(&e),
                    pieces.len()
                );
            }
        }
        other => return Err(RunError::Usage(format!("unknown command `{other}`"))),
    }
    Ok(())
}

fn expression_atom_count(e: &Expression) -> usize {
    match e {
        Expression::AtomInf(_) | Expression::AtomSup(_) => 1,
        Expression::Min(a, b) | Expression::Max(a, b) | Expression::Sum(a, b) => {
            expression_atom_count(a) + expression_atom_count(b)
        }
    }
}

fn print_verdict(v: &engine::Verdict) {
    println!("verdict {}", v.answer);
    println!("result {}", v.value);
    println!("piece {}", v.attribution.piece);
    println!("scc {}", v.attribution.scc);
}
