//! Command-line front end for the `isotypic` engine.

pub mod cache;
pub mod model;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use isotypic::branching::{reciprocity_check, restrict_gl_to_so, restrict_gl_to_sp};
use isotypic::characters::dim;
use isotypic::fock::{
    check_covariance, hwv, laplacian, pairing, parse_polys, split_mixed, supq_laplacians, verify_sl2, verify_sp2n,
    verify_supq, CovarianceSide, FockPoly, HwvKind, RelationCheck, DEFAULT_TRIALS,
};
use isotypic::lr::{tensor_mixed, tensor_multi};
use isotypic::stable::{identity_multiplicity, stable_branch, stable_tensor};
use isotypic::{Decomposition, Error, Family, Group, MixedSignature, Result, Signature, ENGINE_VERSION};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::de::DeserializeOwned;
use serde::Serialize;

use cache::Cache;
use model::*;

const SUBCOMMANDS: &str = "tensor, branch, reciprocity, identity-mult, dim, fock";

#[derive(Parser, Debug)]
#[command(
    name = "isotypic",
    version,
    about = "Exact multiplicities for classical groups and their dual pairs",
    subcommand_required = true,
    arg_required_else_help = true
)]
pub struct Cli {
    /// Print JSON instead of a table
    #[arg(long, global = true)]
    pub json: bool,
    /// Append-only result cache (JSON lines)
    #[arg(long, global = true, env = "ISOTYPIC_CACHE", value_name = "PATH")]
    pub cache: Option<PathBuf>,
    /// Seed for randomized covariance trials
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Decompose a tensor product of U(k) representations
    Tensor(TensorArgs),
    /// Restrict a U(k) representation to SO(k) or Sp(k)
    Branch(BranchArgs),
    /// Compare both sides of the (O(k), sp(2n)) reciprocity
    Reciprocity(ReciprocityArgs),
    /// Multiplicity of the trivial representation in SIG... ⊗ MU✓
    IdentityMult(IdentityArgs),
    /// Dimension of an irreducible representation
    Dim(DimArgs),
    /// Symbolic Fock-space checks
    #[command(subcommand)]
    Fock(FockCommand),
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("mode").required(true).args(["stable", "rank"])))]
pub struct TensorArgs {
    #[arg(long, default_value = "u", value_parser = ["u", "gl"])]
    pub group: String,
    /// Report the stable decomposition and its stabilization index
    #[arg(long)]
    pub stable: bool,
    #[arg(long)]
    pub rank: Option<usize>,
    /// Signatures such as 2,1 (mixed signatures like 1,0,-1 at finite rank)
    #[arg(required = true, allow_hyphen_values = true)]
    pub sigs: Vec<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Target {
    So,
    Sp,
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("mode").required(true).args(["stable", "rank"])))]
pub struct BranchArgs {
    #[arg(long, value_enum)]
    pub to: Target,
    #[arg(long)]
    pub stable: bool,
    #[arg(long)]
    pub rank: Option<usize>,
    pub sig: String,
}

#[derive(Args, Debug)]
pub struct ReciprocityArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub k: usize,
    pub sig: String,
}

#[derive(Args, Debug)]
pub struct IdentityArgs {
    #[arg(long)]
    pub mu: String,
    pub sigs: Vec<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum DimGroup {
    U,
    So,
    Sp,
}

#[derive(Args, Debug)]
pub struct DimArgs {
    #[arg(long, value_enum)]
    pub group: DimGroup,
    #[arg(long)]
    pub rank: usize,
    pub sig: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Algebra {
    Sl2,
    Sp2n,
    Supq,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Gl,
    #[value(name = "so_rank1", alias = "so-rank1")]
    SoRank1,
    #[value(name = "so_general", alias = "so-general")]
    SoGeneral,
    Upq,
}

#[derive(Subcommand, Debug)]
pub enum FockCommand {
    /// Check commutation relations as exact operator identities
    Verify {
        #[arg(value_enum)]
        algebra: Algebra,
        #[arg(long, default_value_t = 1)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 1)]
        p: usize,
        #[arg(long, default_value_t = 1)]
        q: usize,
    },
    /// Build a highest-weight vector and check its defining properties
    Hwv {
        #[arg(long, value_enum)]
        kind: KindArg,
        /// Signature; for upq the full mixed signature of length k
        #[arg(long, allow_hyphen_values = true)]
        sig: String,
        #[arg(long, default_value_t = 1)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Rows of the Z block for upq (defaults to --n)
        #[arg(long)]
        p: Option<usize>,
        /// Rows of the W block for upq
        #[arg(long, default_value_t = 1)]
        q: usize,
    },
    /// Fock pairing of two polynomials
    Pair {
        #[arg(allow_hyphen_values = true)]
        left: String,
        #[arg(allow_hyphen_values = true)]
        right: String,
    },
}

/// What a subcommand produced.
#[derive(Debug)]
pub enum Output {
    Decomposition(DecompositionOut),
    Dim(DimOut),
    Reciprocity(ReciprocityOut),
    Identity(IdentityOut),
    Verify(VerifyOut),
    Hwv(HwvOut),
    Pair(PairOut),
}

impl Output {
    fn json(&self) -> String {
        let s = match self {
            Output::Decomposition(x) => serde_json::to_string(x),
            Output::Dim(x) => serde_json::to_string(x),
            Output::Reciprocity(x) => serde_json::to_string(x),
            Output::Identity(x) => serde_json::to_string(x),
            Output::Verify(x) => serde_json::to_string(x),
            Output::Hwv(x) => serde_json::to_string(x),
            Output::Pair(x) => serde_json::to_string(x),
        };
        s.expect("result models serialize")
    }

    fn render(&self) -> String {
        match self {
            Output::Decomposition(x) => x.render(),
            Output::Dim(x) => x.render(),
            Output::Reciprocity(x) => x.render(),
            Output::Identity(x) => x.render(),
            Output::Verify(x) => x.render(),
            Output::Hwv(x) => x.render(),
            Output::Pair(x) => x.render(),
        }
    }
}

struct Ctx {
    cache: Option<Cache>,
    seed: u64,
    warnings: Vec<String>,
}

impl Ctx {
    fn cached<T: Serialize + DeserializeOwned>(
        &mut self,
        query: String,
        compute: impl FnOnce() -> Result<T>,
    ) -> Result<T> {
        if let Some(cache) = self.cache.as_mut() {
            let hit = cache.get(&query);
            self.warnings.extend(cache.take_warnings());
            if let Some(record) = hit {
                match serde_json::from_value(record.result) {
                    Ok(v) => return Ok(v),
                    Err(e) => self.warnings.push(format!("ignoring unreadable cached result for {query:?}: {e}")),
                }
            }
        }
        let value = compute()?;
        if let Some(cache) = self.cache.as_mut() {
            cache.put(&query, serde_json::to_value(&value).expect("result models serialize"));
            self.warnings.extend(cache.take_warnings());
        }
        Ok(value)
    }
}

fn parse_sig(s: &str) -> Result<Signature> {
    s.parse()
}

fn parse_sigs(sigs: &[String]) -> Result<Vec<Signature>> {
    sigs.iter().map(|s| parse_sig(s)).collect()
}

fn canonical(sigs: &[Signature]) -> String {
    sigs.iter().map(Signature::to_string).collect::<Vec<_>>().join(" ")
}

fn parts(sig: &Signature) -> Vec<i64> {
    sig.parts().iter().map(|&p| p as i64).collect()
}

fn mixed_product(raw: &[String], rank: usize) -> Result<Decomposition<MixedSignature>> {
    let mut factors = Vec::with_capacity(raw.len());
    for s in raw {
        let m: MixedSignature = s.parse()?;
        let m =
            if m.parts().iter().all(|&p| p >= 0) { Signature::canonicalize(m.parts())?.to_mixed(rank)? } else { m };
        if m.rank() != rank {
            return Err(Error::RankMismatch { expected: rank, found: m.rank() });
        }
        factors.push(m);
    }
    let mut acc = Decomposition::from_terms(Group::gl(rank), [(MixedSignature::zero(rank), 1)]);
    for f in &factors {
        let mut next = Decomposition::new(Group::gl(rank));
        for (sigma, m) in acc.iter() {
            for (tau, c) in tensor_mixed(sigma, f, rank)?.iter() {
                next.add(tau.clone(), m * c);
            }
        }
        acc = next;
    }
    Ok(acc)
}

fn tensor(ctx: &mut Ctx, args: &TensorArgs) -> Result<Output> {
    let has_negative = args.sigs.iter().any(|s| s.contains('-'));
    if let (Some(rank), true) = (args.rank, has_negative) {
        let canon: Vec<String> =
            args.sigs.iter().map(|s| s.parse::<MixedSignature>().map(|m| m.to_string())).collect::<Result<_>>()?;
        let query = format!("tensor rank={rank} mixed {}", canon.join(" "));
        let out = ctx.cached(query, || Ok(DecompositionOut::from_mixed(&mixed_product(&args.sigs, rank)?)))?;
        return Ok(Output::Decomposition(out));
    }
    let sigs = parse_sigs(&args.sigs)?;
    let out = match args.rank {
        Some(rank) => ctx.cached(format!("tensor rank={rank} {}", canonical(&sigs)), || {
            Ok(DecompositionOut::from_decomposition(&tensor_multi(&sigs, rank)?))
        })?,
        None => ctx.cached(format!("tensor stable {}", canonical(&sigs)), || {
            Ok(DecompositionOut::from_stable(&stable_tensor(&sigs)?))
        })?,
    };
    Ok(Output::Decomposition(out))
}

fn branch(ctx: &mut Ctx, args: &BranchArgs) -> Result<Output> {
    let sig = parse_sig(&args.sig)?;
    let (tag, family) = match args.to {
        Target::So => ("so", Family::So),
        Target::Sp => ("sp", Family::Sp),
    };
    let out = match args.rank {
        Some(k) => ctx.cached(format!("branch {tag} rank={k} {sig}"), || {
            let d = match family {
                Family::Sp => restrict_gl_to_sp(&sig, k)?,
                _ => restrict_gl_to_so(&sig, k)?,
            };
            Ok(DecompositionOut::from_decomposition(&d))
        })?,
        None => ctx.cached(format!("branch {tag} stable {sig}"), || {
            Ok(DecompositionOut::from_stable(&stable_branch(&sig, family)?))
        })?,
    };
    Ok(Output::Decomposition(out))
}

fn reciprocity(ctx: &mut Ctx, args: &ReciprocityArgs) -> Result<Output> {
    let sig = parse_sig(&args.sig)?;
    let out = ctx.cached(format!("reciprocity n={} k={} {sig}", args.n, args.k), || {
        Ok(ReciprocityOut::from_report(&reciprocity_check(&sig, args.n, args.k)?))
    })?;
    Ok(Output::Reciprocity(out))
}

fn identity(ctx: &mut Ctx, args: &IdentityArgs) -> Result<Output> {
    let mu = parse_sig(&args.mu)?;
    let factors = parse_sigs(&args.sigs)?;
    let out = ctx.cached(format!("identity-mult mu={mu} {}", canonical(&factors)), || {
        let (k0, stable_mult) = if factors.is_empty() {
            (1, u64::from(mu.is_empty()))
        } else {
            let r = stable_tensor(&factors)?;
            (r.k0, r.stable.get(&mu))
        };
        let identity_mult = identity_multiplicity(&factors, &mu)?;
        Ok(IdentityOut {
            factors: factors.iter().map(parts).collect(),
            mu: parts(&mu),
            k: k0.max(mu.len()).max(1),
            identity_mult,
            stable_mult,
            agree: identity_mult == stable_mult,
        })
    })?;
    Ok(Output::Identity(out))
}

fn dimension(ctx: &mut Ctx, args: &DimArgs) -> Result<Output> {
    let sig = parse_sig(&args.sig)?;
    let (tag, family) = match args.group {
        DimGroup::U => ("u", Family::Gl),
        DimGroup::So => ("so", Family::So),
        DimGroup::Sp => ("sp", Family::Sp),
    };
    let out = ctx.cached(format!("dim {tag} rank={} {sig}", args.rank), || {
        let group = Group::new(family, args.rank)?;
        Ok(DimOut { group: GroupOut::from_group(&group), signature: parts(&sig), dim: dim(&group, &sig)?.to_string() })
    })?;
    Ok(Output::Dim(out))
}

fn relations_out(algebra: &str, shape: Vec<usize>, checks: &[RelationCheck]) -> VerifyOut {
    let relations: Vec<RelationOut> = checks.iter().map(RelationOut::from_check).collect();
    let holds = relations.iter().all(|r| r.holds);
    VerifyOut { algebra: algebra.to_string(), shape, relations, holds }
}

fn parse_ints(s: &str) -> Result<Vec<i64>> {
    Ok(s.parse::<MixedSignature>()?.parts().to_vec())
}

fn all_killed(ops: impl IntoIterator<Item = isotypic::fock::WeylOp>, f: &FockPoly) -> Result<bool> {
    for op in ops {
        if !op.apply(f)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

fn fock(ctx: &mut Ctx, cmd: &FockCommand) -> Result<Output> {
    match cmd {
        FockCommand::Verify { algebra, n, k, p, q } => {
            let (n, k, p, q) = (*n, *k, *p, *q);
            let out = match algebra {
                Algebra::Sl2 => ctx.cached(format!("fock verify sl2 k={k}"), || {
                    Ok(relations_out("sl2", vec![1, k], &verify_sl2(k)))
                })?,
                Algebra::Sp2n => ctx.cached(format!("fock verify sp2n n={n} k={k}"), || {
                    Ok(relations_out("sp2n", vec![n, k], &verify_sp2n(n, k)))
                })?,
                Algebra::Supq => ctx.cached(format!("fock verify supq p={p} q={q} k={k}"), || {
                    Ok(relations_out("supq", vec![p, q, k], &verify_supq(p, q, k)))
                })?,
            };
            Ok(Output::Verify(out))
        }
        FockCommand::Hwv { kind, sig, n, k, p, q } => {
            let kind = match kind {
                KindArg::Gl => HwvKind::Gl,
                KindArg::SoRank1 => HwvKind::SoRank1,
                KindArg::SoGeneral => HwvKind::SoGeneral,
                KindArg::Upq => HwvKind::Upq,
            };
            let rows = if kind == HwvKind::Upq { p.unwrap_or(*n) } else { *n };
            let (k, q) = (*k, *q);
            let ints = parse_ints(sig)?;
            let seed = ctx.seed;
            let query = format!("fock hwv {kind} sig={} n={rows} k={k} q={q} seed={seed}", sig_key(&ints));
            let out = ctx.cached(query, || {
                let f = hwv(kind, &ints, rows, k, q)?;
                let shape = f.shape();
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let mut checks = Vec::new();
                let exps: Vec<u32> = ints.iter().map(|&x| x.max(0) as u32).collect();
                match kind {
                    HwvKind::Gl => {
                        let left = check_covariance(&f, CovarianceSide::LeftLower, &exps, DEFAULT_TRIALS, &mut rng);
                        let right = check_covariance(&f, CovarianceSide::RightUpper, &exps, DEFAULT_TRIALS, &mut rng);
                        checks.push(CheckOut { name: "left_lower".into(), pass: left });
                        checks.push(CheckOut { name: "right_upper".into(), pass: right });
                    }
                    HwvKind::SoRank1 | HwvKind::SoGeneral => {
                        let laps = (0..shape.n).flat_map(|a| (0..shape.n).map(move |b| laplacian(shape, a, b)));
                        checks.push(CheckOut { name: "harmonic".into(), pass: all_killed(laps, &f)? });
                        let left = check_covariance(&f, CovarianceSide::LeftLower, &exps, DEFAULT_TRIALS, &mut rng);
                        checks.push(CheckOut { name: "left_lower".into(), pass: left });
                    }
                    HwvKind::Upq => {
                        let sigma = MixedSignature::new(ints.clone())?;
                        split_mixed(&sigma, rows, q)?;
                        let laps = supq_laplacians(rows, q, k).laplacians.into_iter().flatten();
                        checks.push(CheckOut { name: "mixed_harmonic".into(), pass: all_killed(laps, &f)? });
                    }
                }
                Ok(HwvOut {
                    kind: kind.tag().into(),
                    signature: ints.clone(),
                    n: rows,
                    k,
                    polynomial: f.to_string(),
                    checks,
                })
            })?;
            Ok(Output::Hwv(out))
        }
        FockCommand::Pair { left, right } => {
            let polys = parse_polys(&[left, right])?;
            let out = ctx.cached(format!("fock pair {} | {}", polys[0], polys[1]), || {
                Ok(PairOut {
                    left: polys[0].to_string(),
                    right: polys[1].to_string(),
                    value: pairing(&polys[0], &polys[1])?.to_string(),
                })
            })?;
            Ok(Output::Pair(out))
        }
    }
}

fn sig_key(ints: &[i64]) -> String {
    ints.iter().map(i64::to_string).collect::<Vec<_>>().join(",")
}

/// Runs one command and returns its output model.
pub fn execute(cli: &Cli) -> (Result<Output>, Vec<String>) {
    let mut ctx =
        Ctx { cache: cli.cache.as_ref().map(|p| Cache::new(p, ENGINE_VERSION)), seed: cli.seed, warnings: Vec::new() };
    let result = match &cli.command {
        Command::Tensor(a) => tensor(&mut ctx, a),
        Command::Branch(a) => branch(&mut ctx, a),
        Command::Reciprocity(a) => reciprocity(&mut ctx, a),
        Command::IdentityMult(a) => identity(&mut ctx, a),
        Command::Dim(a) => dimension(&mut ctx, a),
        Command::Fock(c) => fock(&mut ctx, c),
    };
    (result, ctx.warnings)
}

/// Parses `args`, runs the command, writes to `out`/`err` and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    return 0;
                }
                ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => 2,
                _ => 2,
            };
            let _ = write!(err, "{}", e.render());
            if matches!(
                e.kind(),
                ErrorKind::InvalidSubcommand
                    | ErrorKind::MissingSubcommand
                    | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand
            ) {
                let _ = writeln!(err, "valid subcommands: {SUBCOMMANDS}");
            }
            return code;
        }
    };
    let (result, warnings) = execute(&cli);
    for w in warnings {
        let _ = writeln!(err, "warning: {w}");
    }
    match result {
        Ok(output) => {
            let text = if cli.json { output.json() + "\n" } else { output.render() };
            let _ = out.write_all(text.as_bytes());
            0
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}
