use std::fmt::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use typea_ts::rational::{format_vector, parse_vector};
use typea_ts::sampling::Sampler;
use typea_ts::stability::oracle_counterexample;
use typea_ts::{
    all_orientations, construct_total, is_totally_stable_fast, is_totally_stable_oracle, minimality_witness,
    total_stability_inequalities, CentralCharge, Error, Rational, TypeAQuiver, Verdict, VertexSet,
};

/// Largest vertex count accepted by `sweep` (every orientation is checked
/// against the brute-force oracle).
pub const MAX_SWEEP_N: usize = 7;

#[derive(Debug, Parser)]
#[command(name = "typea-ts", version, about = "Total stability conditions for type A quivers")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Machine,
}

#[derive(Debug, Args)]
pub struct QuiverArg {
    /// Orientation word over {R, L}; may be empty.
    #[arg(long)]
    pub quiver: String,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Staircase coordinates x(z), y(z).
    Embed(QuiverArg),
    /// Level sets and their chains.
    Levels(QuiverArg),
    /// Orientation word of the opposite quiver.
    Opposite(QuiverArg),
    /// The n-1 inequalities characterizing total stability.
    Inequalities(QuiverArg),
    /// Decide total stability of (w, r).
    Check {
        #[command(flatten)]
        quiver: QuiverArg,
        #[arg(long, allow_hyphen_values = true)]
        w: String,
        #[arg(long)]
        r: String,
        /// Also run the brute-force oracle and fail on disagreement.
        #[arg(long)]
        oracle: bool,
    },
    /// Construct a totally stable weight for the given r.
    Construct {
        #[command(flatten)]
        quiver: QuiverArg,
        #[arg(long)]
        r: String,
    },
    /// A weight violating exactly inequality k.
    Witness {
        #[command(flatten)]
        quiver: QuiverArg,
        #[arg(long)]
        r: String,
        #[arg(long)]
        k: usize,
    },
    /// Compare the inequality test against the oracle over every
    /// orientation of A_1..A_n.
    Sweep {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// Rendered result of one command.
pub struct Outcome {
    pub text: String,
    pub json: Value,
    /// 0 success, 1 property false.
    pub status: i32,
    pub diagnostic: Option<String>,
}

impl Outcome {
    fn ok(text: String, json: Value) -> Self {
        Outcome { text, json, status: 0, diagnostic: None }
    }
}

fn parse_quiver(arg: &QuiverArg) -> Result<TypeAQuiver, Error> {
    arg.quiver.parse()
}

fn parse_len(s: &str, n: usize) -> Result<Vec<Rational>, Error> {
    let v = parse_vector(s)?;
    if v.len() != n {
        return Err(Error::LengthMismatch { expected: n, found: v.len() });
    }
    Ok(v)
}

fn join<T: ToString>(items: &[T]) -> String {
    items.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

fn sets_json(sets: &[VertexSet]) -> Value {
    json!(sets.iter().map(|s| s.vertices().to_vec()).collect::<Vec<_>>())
}

pub fn run(command: &Command) -> Result<Outcome, Error> {
    match command {
        Command::Embed(arg) => embed(&parse_quiver(arg)?),
        Command::Levels(arg) => levels(&parse_quiver(arg)?),
        Command::Opposite(arg) => {
            let q = parse_quiver(arg)?;
            let op = q.opposite().word();
            Ok(Outcome::ok(format!("{op}\n"), json!({"command": "opposite", "quiver": q.word(), "opposite": op})))
        }
        Command::Inequalities(arg) => inequalities(&parse_quiver(arg)?),
        Command::Check { quiver, w, r, oracle } => {
            let q = parse_quiver(quiver)?;
            let z = CentralCharge::new(parse_len(w, q.n())?, parse_len(r, q.n())?)?;
            check(&q, &z, *oracle)
        }
        Command::Construct { quiver, r } => {
            let q = parse_quiver(quiver)?;
            let r = parse_len(r, q.n())?;
            let w = construct_total(&q, &r)?;
            let text = format!("{}\n", format_vector(&w));
            Ok(Outcome::ok(text, json!({"command": "construct", "quiver": q.word(), "r": r, "w": w})))
        }
        Command::Witness { quiver, r, k } => {
            let q = parse_quiver(quiver)?;
            let r = parse_len(r, q.n())?;
            witness(&q, r, *k)
        }
        Command::Sweep { n, samples, seed } => sweep(*n, *samples, *seed),
    }
}

fn embed(q: &TypeAQuiver) -> Result<Outcome, Error> {
    let e = q.staircase_embedding();
    let text = format!("x={}\ny={}\n", join(e.xs()), join(e.ys()));
    Ok(Outcome::ok(text, json!({"command": "embed", "quiver": q.word(), "x": e.xs(), "y": e.ys()})))
}

fn levels(q: &TypeAQuiver) -> Result<Outcome, Error> {
    let l = q.level_sets();
    let mut text = String::new();
    for (name, sets) in [("X", &l.x_levels), ("Y", &l.y_levels), ("Xt", &l.x_chains), ("Yt", &l.y_chains)] {
        for (k, s) in sets.iter().enumerate() {
            writeln!(text, "{name}_{k}={s}").unwrap();
        }
    }
    let json = json!({
        "command": "levels",
        "quiver": q.word(),
        "x_levels": sets_json(&l.x_levels),
        "y_levels": sets_json(&l.y_levels),
        "x_chains": sets_json(&l.x_chains),
        "y_chains": sets_json(&l.y_chains),
    });
    Ok(Outcome::ok(text, json))
}

fn inequalities(q: &TypeAQuiver) -> Result<Outcome, Error> {
    let system = total_stability_inequalities(q);
    let text: String = system.records.iter().map(|rec| format!("{rec}\n")).collect();
    let records: Vec<Value> = system
        .records
        .iter()
        .map(|rec| json!({"lhs": rec.lhs.vertices(), "rhs": rec.rhs.vertices(), "text": rec.to_string()}))
        .collect();
    Ok(Outcome::ok(text, json!({"command": "inequalities", "quiver": q.word(), "inequalities": records})))
}

fn check(q: &TypeAQuiver, z: &CentralCharge, with_oracle: bool) -> Result<Outcome, Error> {
    let verdict = is_totally_stable_fast(q, z)?;
    let (mut text, violated, mut status) = match &verdict {
        Verdict::TotallyStable => ("TOTALLY_STABLE\n".to_string(), Value::Null, 0),
        Verdict::Violated { index, inequality } => (
            format!("NOT_TOTALLY_STABLE: {inequality}\n"),
            json!({"index": index, "inequality": inequality.to_string()}),
            1,
        ),
    };
    let mut json = json!({
        "command": "check",
        "quiver": q.word(),
        "totally_stable": verdict.is_totally_stable(),
        "violated": violated,
    });
    let mut diagnostic = None;
    if with_oracle {
        let counterexample = oracle_counterexample(q, z)?;
        let agrees = counterexample.is_none() == verdict.is_totally_stable();
        text.push_str(if agrees { "oracle=agree\n" } else { "oracle=DISAGREE\n" });
        json["oracle"] = json!({
            "agrees": agrees,
            "totally_stable": counterexample.is_none(),
            "counterexample": counterexample.as_ref().map(|c| json!({
                "module": c.module.to_string(),
                "subrep": c.subrep.vertices(),
            })),
        });
        if !agrees {
            status = 1;
            diagnostic = Some(format!(
                "error: inequality test and brute-force oracle disagree (oracle counterexample: {})",
                counterexample.map_or("none".to_string(), |c| format!("{} destabilized by {}", c.module, c.subrep))
            ));
        }
    }
    Ok(Outcome { text, json, status, diagnostic })
}

fn witness(q: &TypeAQuiver, r: Vec<Rational>, k: usize) -> Result<Outcome, Error> {
    let w = minimality_witness(q, &r, k)?;
    let system = total_stability_inequalities(q);
    let z = CentralCharge::new(w.clone(), r)?;
    let violated = system.violated(&z);
    let record = &system.records[k - 1];
    let verified = violated == [k];
    let text = format!("{}\nviolated={k} {record}\n", format_vector(&w));
    let json = json!({
        "command": "witness",
        "quiver": q.word(),
        "k": k,
        "w": w,
        "violated": violated,
        "inequality": record.to_string(),
        "verified": verified,
    });
    let diagnostic = (!verified).then(|| format!("error: witness violates records {violated:?}, expected [{k}]"));
    Ok(Outcome { text, json, status: i32::from(!verified), diagnostic })
}

#[derive(Debug, Default, Clone, Copy)]
struct SweepTally {
    cases: usize,
    mismatches: usize,
    stable: usize,
    construct_failures: usize,
    witness_failures: usize,
}

struct SweepJob {
    quiver: TypeAQuiver,
    charges: Vec<CentralCharge>,
    r: Vec<Rational>,
}

fn sweep_one(job: &SweepJob) -> Result<SweepTally, Error> {
    let q = &job.quiver;
    let mut tally = SweepTally::default();
    for z in &job.charges {
        let fast = is_totally_stable_fast(q, z)?.is_totally_stable();
        let oracle = is_totally_stable_oracle(q, z)?;
        tally.cases += 1;
        tally.stable += usize::from(oracle);
        tally.mismatches += usize::from(fast != oracle);
    }
    let w = construct_total(q, &job.r)?;
    let z = CentralCharge::new(w, job.r.clone())?;
    if !(is_totally_stable_fast(q, &z)?.is_totally_stable() && is_totally_stable_oracle(q, &z)?) {
        tally.construct_failures += 1;
    }
    let system = total_stability_inequalities(q);
    for k in 1..q.n() {
        let w = minimality_witness(q, &job.r, k)?;
        let z = CentralCharge::new(w, job.r.clone())?;
        if system.violated(&z) != [k] || is_totally_stable_oracle(q, &z)? {
            tally.witness_failures += 1;
        }
    }
    Ok(tally)
}

fn sweep(n: usize, samples: usize, seed: u64) -> Result<Outcome, Error> {
    if n == 0 || n > MAX_SWEEP_N {
        return Err(Error::VertexCount { n, max: MAX_SWEEP_N });
    }
    if samples == 0 {
        return Err(Error::Invariant("samples must be at least 1".to_string()));
    }
    // Inputs are drawn sequentially so the result does not depend on
    // scheduling.
    let mut sampler = Sampler::new(seed);
    let mut jobs = Vec::new();
    for size in 1..=n {
        for quiver in all_orientations(size)? {
            let charges = (0..samples).map(|_| sampler.charge(size)).collect();
            let r = sampler.positive_vector(size);
            jobs.push(SweepJob { quiver, charges, r });
        }
    }
    let tallies = jobs.par_iter().map(sweep_one).collect::<Result<Vec<_>, _>>()?;
    let total = tallies.iter().fold(SweepTally::default(), |acc, t| SweepTally {
        cases: acc.cases + t.cases,
        mismatches: acc.mismatches + t.mismatches,
        stable: acc.stable + t.stable,
        construct_failures: acc.construct_failures + t.construct_failures,
        witness_failures: acc.witness_failures + t.witness_failures,
    });
    let text = format!(
        "quivers={} cases={} mismatches={}\nstable={} construct_failures={} witness_failures={}\n",
        jobs.len(),
        total.cases,
        total.mismatches,
        total.stable,
        total.construct_failures,
        total.witness_failures
    );
    let json = json!({
        "command": "sweep",
        "n": n,
        "samples": samples,
        "seed": seed,
        "quivers": jobs.len(),
        "cases": total.cases,
        "mismatches": total.mismatches,
        "stable": total.stable,
        "construct_failures": total.construct_failures,
        "witness_failures": total.witness_failures,
    });
    let failed = total.mismatches + total.construct_failures + total.witness_failures > 0;
    Ok(Outcome { text, json, status: i32::from(failed), diagnostic: None })
}
