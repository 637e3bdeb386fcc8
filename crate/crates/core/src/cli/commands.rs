//! Subcommand implementations.

use std::collections::BTreeSet;
use std::sync::Arc;

use serde_json::{json, Value};

use crate::braidrep::{self, parabolic_system, BraidRepresentation};
use crate::counterexample::{self, Verdict};
use crate::coxeter::{genset, CoxeterSystem, Side};
use crate::exact::parse::{parse_laurent, parse_rational};
use crate::exact::{FieldKind, Fp, Matrix, RatFunc, Q};
use crate::gluedalg::{self, simple_modules, GlueError, GluingDatum};
use crate::kwglue::{self, KwError, DEFAULT_WORD_LIMIT};
use crate::simplicial;

use super::input::{
    builtin_rep, input, load_datum, parse_field, parse_generators, read_rep_file, rep_to_value, system_from_flags,
    system_to_value, CliError, CliField, RawRep,
};
use super::{
    Command, CounterArgs, CoxeterCmd, FuzzArgs, GlueArgs, GlueCmd, RepArgs, RepCmd, Report, RunConfig, SystemArgs,
};

pub(super) fn execute(config: &RunConfig) -> Result<Report, CliError> {
    match &config.command {
        Command::Coxeter(cmd) => coxeter(cmd),
        Command::Rep(cmd) => rep(cmd),
        Command::HomlemFuzz(args) => homlem_fuzz(args, config.seed),
        Command::Glue(cmd) => glue(cmd, config.seed),
        Command::Counterexample(args) => counter(args),
    }
}

fn require_system(args: &SystemArgs) -> Result<CoxeterSystem, CliError> {
    system_from_flags(args.ty.as_deref(), args.matrix.as_deref(), args.cap_group)?
        .ok_or_else(|| input("give --type or --matrix"))
}

fn describe_system(report: &mut Report, sys: &CoxeterSystem) {
    report.put("system", system_to_value(sys));
    report.put("order", sys.order());
}

fn kw_check(r: Result<bool, KwError>) -> Result<bool, CliError> {
    match r {
        Ok(b) => Ok(b),
        Err(KwError::WellDefinednessFailure(_)) => Ok(false),
        Err(e) => Err(CliError::Check(e.to_string())),
    }
}

// ---------------------------------------------------------------- coxeter

fn coxeter(cmd: &CoxeterCmd) -> Result<Report, CliError> {
    match cmd {
        CoxeterCmd::Info(args) => coxeter_info(&require_system(args)?),
        CoxeterCmd::Convexity(args) => coxeter_convexity(&require_system(args)?),
        CoxeterCmd::Sizig3(args) => coxeter_sizig3(&require_system(args)?),
    }
}

fn coxeter_info(sys: &CoxeterSystem) -> Result<Report, CliError> {
    let mut report = Report::new("coxeter info");
    describe_system(&mut report, sys);
    report.put("rank", sys.rank());
    report.put("matrix", sys.coxeter_matrix());
    let w0 = sys.w0();
    report.put("w0", sys.format_element(w0));
    report.put("length_w0", sys.length(w0));
    report.put("reflections", sys.reflections().len());
    let mut by_length = vec![0usize; sys.length(w0) + 1];
    for w in sys.elements() {
        by_length[sys.length(w)] += 1;
    }
    report.put("elements_by_length", by_length);
    let exchange = sys.elements().all(|w| {
        (0..sys.rank()).all(|s| sys.length(sys.gen_mul(s, w)).abs_diff(sys.length(w)) == 1)
    });
    report.check("l(sw) = l(w) ± 1", exchange);
    let partition = (0..sys.rank()).all(|i| {
        let half = sys.half_set(i, Side::Right);
        let mut seen = vec![0u8; sys.order()];
        for &p in &half {
            seen[p.index()] += 1;
            seen[sys.mul_gen(p, i).index()] += 1;
        }
        seen.iter().all(|&c| c == 1)
    });
    report.check("W = P_i ⊔ P_i s_i", partition);
    Ok(report)
}

fn coxeter_convexity(sys: &CoxeterSystem) -> Result<Report, CliError> {
    let mut report = Report::new("coxeter convexity");
    describe_system(&mut report, sys);
    let mut convex = Vec::new();
    for i in 0..sys.rank() {
        let half = sys.half_set(i, Side::Right);
        let violation = sys.convexity_violation(&half).map(|(a, x, b)| {
            format!(
                "{} -> {} -> {}",
                sys.format_element(a),
                sys.format_element(x),
                sys.format_element(b)
            )
        });
        convex.push(json!({"i": i + 1, "size": half.len(), "violation": violation}));
        report.check(&format!("P_{} convex", i + 1), violation.is_none());
    }
    report.put("half_sets", convex);

    // Simple support of r = y s_i y⁻¹ against the cosets W_{S−{j}} y in P_i.
    let all = sys.all_gens();
    let mut support_cases = 0usize;
    let mut support_failures = Vec::new();
    for i in 0..sys.rank() {
        for y in sys.half_set(i, Side::Right) {
            let r = sys.mul(sys.mul_gen(y, i), sys.inv(y));
            let lhs = sys.simple_support(r).map_err(|e| CliError::Check(e.to_string()))?;
            let mut rhs = BTreeSet::new();
            for j in 0..sys.rank() {
                if sys
                    .coset_in_half(all & !(1 << j), y, i)
                    .map_err(|e| CliError::Check(e.to_string()))?
                {
                    rhs.insert(j);
                }
            }
            support_cases += 1;
            if lhs != rhs {
                support_failures.push(format!("i={} y={}", i + 1, sys.format_element(y)));
            }
        }
    }
    report.put("support_cases", support_cases);
    report.put("support_failures", &support_failures);
    report.check("simple support of y s_i y^-1 read off cosets", support_failures.is_empty());

    let mut geodesic_cases = 0usize;
    let mut geodesic_failures = Vec::new();
    for i in 0..sys.rank() {
        let conj = |x| sys.length(sys.mul(sys.mul_gen(x, i), sys.inv(x)));
        for y in sys.elements() {
            for w in sys.elements() {
                if y != w && conj(y) <= conj(w) {
                    continue;
                }
                geodesic_cases += 1;
                if !sys
                    .geodesic_obstruction_check(y, w, i)
                    .map_err(|e| CliError::Check(e.to_string()))?
                {
                    geodesic_failures.push(format!(
                        "i={} y={} w={}",
                        i + 1,
                        sys.format_element(y),
                        sys.format_element(w)
                    ));
                }
            }
        }
    }
    report.put("geodesic_cases", geodesic_cases);
    report.put("geodesic_failures", &geodesic_failures);
    report.check("no geodesic from y to w through y s_i", geodesic_failures.is_empty());
    Ok(report)
}

fn coxeter_sizig3(sys: &CoxeterSystem) -> Result<Report, CliError> {
    let mut report = Report::new("coxeter sizig3");
    describe_system(&mut report, sys);
    let mut witnesses = Vec::new();
    let mut missing = Vec::new();
    let mut factorizations_ok = true;
    for s in 0..sys.rank() {
        for w in sys.elements().filter(|&w| sys.sizig3_applies(s, w)) {
            match sys.sizig3_witness(s, w) {
                Ok(wit) => {
                    factorizations_ok &= sys.mul(wit.w_s_s2, wit.w_prime) == w
                        && sys.length(w) == sys.length(wit.w_s_s2) + sys.length(wit.w_prime);
                    witnesses.push(json!({
                        "s": s + 1,
                        "w": sys.format_element(w),
                        "s2": wit.s2 + 1,
                        "w_s_s2": sys.format_element(wit.w_s_s2),
                        "w_prime": sys.format_element(wit.w_prime),
                    }));
                }
                Err(_) => missing.push(format!("s={} w={}", s + 1, sys.format_element(w))),
            }
        }
    }
    report.put("pairs", witnesses.len() + missing.len());
    report.put("witnesses", witnesses);
    report.put("missing", &missing);
    report.check("witness for every valid (s, w)", missing.is_empty());
    report.check("w = w(s, s2) w' with lengths adding", factorizations_ok);
    Ok(report)
}

// ---------------------------------------------------------------- rep

fn rep_args(cmd: &RepCmd) -> &RepArgs {
    match cmd {
        RepCmd::Validate(a) | RepCmd::Goodness(a) | RepCmd::Euler(a) | RepCmd::Chi(a) => a,
        RepCmd::Half { rep, .. } | RepCmd::Induce { rep, .. } => rep,
    }
}

fn rep(cmd: &RepCmd) -> Result<Report, CliError> {
    let args = rep_args(cmd);
    let raw = args.file.as_deref().map(read_rep_file).transpose()?;
    match (&raw, &args.builtin) {
        (Some(_), Some(_)) => return Err(input("give either --file or --builtin, not both")),
        (None, None) => return Err(input("give --file REP.json or --builtin NAME")),
        _ => {}
    }
    let kind = match &args.field {
        Some(f) => parse_field(f)?,
        None => raw.as_ref().and_then(|r| r.field).unwrap_or(FieldKind::Rational),
    };
    if args.specialize.is_some() && kind != FieldKind::RationalFunction {
        return Err(input("--specialize needs a rational_function representation"));
    }
    match kind {
        FieldKind::Rational => rep_in::<Q>(&(), kind, cmd, raw.as_ref()),
        FieldKind::RationalFunction => rep_in::<RatFunc>(&(), kind, cmd, raw.as_ref()),
        FieldKind::Prime(p) => rep_in::<Fp>(&p, kind, cmd, raw.as_ref()),
    }
}

/// The system a representation lives on: the flags, else the file.
/// `induce` reads the flags as the ambient group instead.
fn rep_system(cmd: &RepCmd, raw: Option<&RawRep>) -> Result<Arc<CoxeterSystem>, CliError> {
    let args = rep_args(cmd);
    let from_file = |cap| raw.and_then(|r| r.system.as_ref()).map(|d| d.build(cap)).transpose();
    if let RepCmd::Induce { subset, .. } = cmd {
        let ambient = require_system(&args.system)?;
        let j = subset_genset(&ambient, subset)?;
        let sub = match from_file(args.system.cap_group)? {
            Some(s) => s,
            None => parabolic_system(&ambient, j).map_err(|e| input(e.to_string()))?,
        };
        return Ok(Arc::new(sub));
    }
    let flags = system_from_flags(args.system.ty.as_deref(), args.system.matrix.as_deref(), args.system.cap_group)?;
    match flags {
        Some(s) => Ok(Arc::new(s)),
        None => from_file(args.system.cap_group)?
            .map(Arc::new)
            .ok_or_else(|| input("no Coxeter system: give --type/--matrix or a `system` entry in the file")),
    }
}

fn subset_genset(sys: &CoxeterSystem, subset: &[usize]) -> Result<u32, CliError> {
    if let Some(&bad) = subset.iter().find(|&&s| s == 0 || s > sys.rank()) {
        return Err(input(format!("--subset: generator {bad} is not in 1..={}", sys.rank())));
    }
    Ok(genset(&subset.iter().map(|s| s - 1).collect::<Vec<_>>()))
}

fn rep_in<F: CliField>(ctx: &F::Ctx, kind: FieldKind, cmd: &RepCmd, raw: Option<&RawRep>) -> Result<Report, CliError> {
    let args = rep_args(cmd);
    let sys = rep_system(cmd, raw)?;
    let q = args
        .q
        .as_deref()
        .map(|s| F::parse_literal(ctx, s).map_err(|e| input(format!("--q: {e}"))))
        .transpose()?;
    let (dim, gens) = match (raw, &args.builtin) {
        (Some(r), _) => parse_generators::<F>(ctx, &r.generators)?,
        (None, Some(name)) => {
            let rep = builtin_rep::<F>(name, sys.clone(), ctx, q.as_ref())?;
            (rep.dim(), rep.gens().to_vec())
        }
        (None, None) => unreachable!("checked by the caller"),
    };
    if let RepCmd::Validate(_) = cmd {
        return rep_validate(sys, ctx, kind, dim, gens, q.as_ref());
    }
    let rep = BraidRepresentation::new(sys, ctx, dim, gens).map_err(|e| input(e.to_string()))?;
    let mut report = match cmd {
        RepCmd::Validate(_) => unreachable!(),
        RepCmd::Goodness(_) => rep_goodness(&rep, kind, args.specialize.as_deref())?,
        RepCmd::Euler(_) => rep_euler(&rep)?,
        RepCmd::Half { index, .. } => rep_half(&rep, *index)?,
        RepCmd::Chi(_) => rep_chi(&rep)?,
        RepCmd::Induce { subset, .. } => rep_induce(&rep, kind, args, subset)?,
    };
    if kind != FieldKind::Rational && kind != FieldKind::RationalFunction {
        report.put("note", "prime field: conditions on q are not checked");
    }
    Ok(report)
}

fn rep_header<F: CliField>(report: &mut Report, sys: &CoxeterSystem, kind: FieldKind, dim: usize) {
    report.put("system", system_to_value(sys));
    report.put_str("field", kind);
    report.put("dim_V", dim);
}

fn rep_validate<F: CliField>(
    sys: Arc<CoxeterSystem>,
    ctx: &F::Ctx,
    kind: FieldKind,
    dim: usize,
    gens: Vec<Matrix<F>>,
    q: Option<&F>,
) -> Result<Report, CliError> {
    let mut report = Report::new("rep validate");
    rep_header::<F>(&mut report, &sys, kind, dim);
    let v = braidrep::validate(&sys, dim, &gens);
    if !v.shape_ok {
        return Err(input(format!(
            "expected {} generator matrices of size {dim}, found {}",
            sys.rank(),
            gens.len()
        )));
    }
    for (s, inv) in v.invertible.iter().enumerate() {
        report.check(&format!("s{} invertible", s + 1), *inv);
    }
    for r in &v.relations {
        report.check(&format!("braid relation s{} s{} (m={})", r.s + 1, r.t + 1, r.m), r.holds);
    }
    if !v.ok() {
        return Ok(report);
    }
    let rep = BraidRepresentation::new(sys, ctx, dim, gens).map_err(|e| input(e.to_string()))?;
    if let Some(q) = q {
        report.put("quadratic_relation", rep.check_quadratic(q));
        report.put("cubic_relation", rep.check_cubic(q));
    }
    report.put("dims_V_s", kwglue::dims_v_s(&rep));
    let well_defined = kw_check(kwglue::all_v_w(&rep, DEFAULT_WORD_LIMIT).map(|_| true))?;
    report.check("V_w independent of the reduced word", well_defined);
    if well_defined {
        report.check("V_w0 = augmentation image", kw_check(kwglue::augmentation_check(&rep))?);
    }
    Ok(report)
}

fn rep_goodness<F: CliField>(
    rep: &BraidRepresentation<F>,
    kind: FieldKind,
    specialize: Option<&str>,
) -> Result<Report, CliError> {
    let mut report = Report::new("rep goodness");
    rep_header::<F>(&mut report, rep.system(), kind, rep.dim());
    let kw = kwglue::kw_space(rep);
    let g = kwglue::goodness_of(rep, &kw);
    report.put("dim_KW", g.dim_kw);
    report.put("dim_span", g.dim_span);
    report.put("cokernel_dim", g.cokernel_dim);
    report.put("span_by_length", &g.span_by_length);
    report.put("good", g.good);
    report.check("good", g.good);
    report.check("euler", kwglue::euler_identity_check(rep, &kw));
    if let Some(at) = specialize {
        let at = parse_rational(at).map_err(|e| input(format!("--specialize: {e}")))?;
        let sys = rep.system().clone();
        let gens = rep
            .gens()
            .iter()
            .enumerate()
            .map(|(s, g)| {
                let mut m = Matrix::zeros(&(), g.nrows(), g.ncols());
                for r in 0..g.nrows() {
                    for c in 0..g.ncols() {
                        let v = g.get(r, c).eval_at(&at).ok_or_else(|| {
                            input(format!("generator {}, entry ({}, {}) has a pole at u = {at}", s + 1, r + 1, c + 1))
                        })?;
                        m.set(r, c, v);
                    }
                }
                Ok(m)
            })
            .collect::<Result<Vec<Matrix<Q>>, CliError>>()?;
        let spec = BraidRepresentation::new(sys, &(), rep.dim(), gens)
            .map_err(|e| input(format!("specialization at u = {at}: {e}")))?;
        let gs = kwglue::is_good(&spec);
        report.put("specialized", json!({"at": at.to_string(), "dim_KW": gs.dim_kw, "good": gs.good}));
        report.check("good at the specialization", gs.good);
    }
    Ok(report)
}

fn rep_euler<F: CliField>(rep: &BraidRepresentation<F>) -> Result<Report, CliError> {
    let mut report = Report::new("rep euler");
    report.put("system", system_to_value(rep.system()));
    report.put("dim_V", rep.dim());
    let kw = kwglue::kw_space(rep);
    report.put("dim_KW", kw.dim());
    report.check("sections i_y land in K_W(V) with p_y i_y = id", kw_check(kwglue::sections_check(rep, &kw))?);
    report.check("euler", kwglue::euler_identity_check(rep, &kw));
    Ok(report)
}

fn rep_half<F: CliField>(rep: &BraidRepresentation<F>, index: Option<usize>) -> Result<Report, CliError> {
    let mut report = Report::new("rep half");
    report.put("system", system_to_value(rep.system()));
    report.put("dim_V", rep.dim());
    let rank = rep.system().rank();
    let indices: Vec<usize> = match index {
        Some(i) if i == 0 || i > rank => return Err(input(format!("--index {i} is not in 1..={rank}"))),
        Some(i) => vec![i - 1],
        None => (0..rank).collect(),
    };
    for i in indices {
        report.check(&format!("half identity for P_{}", i + 1), kw_check(kwglue::half_identity_check(rep, i))?);
    }
    Ok(report)
}

fn rep_chi<F: CliField>(rep: &BraidRepresentation<F>) -> Result<Report, CliError> {
    let mut report = Report::new("rep chi");
    report.put("system", system_to_value(rep.system()));
    report.put("dim_V", rep.dim());
    let dual = rep.transpose_rep().map_err(|e| input(e.to_string()))?;
    let chi = kwglue::chi_pairing(rep, &dual).map_err(|e| CliError::Check(e.to_string()))?;
    report.put("gram_size", chi.gram.nrows());
    report.put("gram_rank", chi.gram.rank());
    report.check("descends to K_W", chi.descends);
    report.check("χ(i_y v, v') = <v, p_y v'>", chi.left_adjunction);
    report.check("χ(v, i_y v') = <p_y v, v'>", chi.right_adjunction);
    report.check("nonsingular", chi.nonsingular);
    Ok(report)
}

fn rep_induce<F: CliField>(
    rep0: &BraidRepresentation<F>,
    kind: FieldKind,
    args: &RepArgs,
    subset: &[usize],
) -> Result<Report, CliError> {
    let mut report = Report::new("rep induce");
    let ambient = Arc::new(require_system(&args.system)?);
    let j = subset_genset(&ambient, subset)?;
    report.put("system", system_to_value(&ambient));
    report.put("subset", subset);
    report.put("dim_in", rep0.dim());
    let good_in = kwglue::is_good(rep0).good;
    report.put("good_in", good_in);
    let induced = match braidrep::induce(rep0, ambient.clone(), j) {
        Ok(ind) => ind,
        Err(braidrep::BraidError::ValidationFailed(msg)) => {
            report.put("failure", msg);
            report.check("braid relations", false);
            return Ok(report);
        }
        Err(e) => return Err(input(e.to_string())),
    };
    let good_out = kwglue::is_good(&induced.rep).good;
    report.put("dim_out", induced.rep.dim());
    report.put(
        "coset_reps",
        induced.coset_reps.iter().map(|&w| ambient.format_element(w)).collect::<Vec<_>>(),
    );
    report.put("block_targets", &induced.block_targets);
    report.put("good_out", good_out);
    report.put("induced", rep_to_value(&induced.rep, kind));
    report.check("braid relations", true);
    report.check("good input gives good output", !good_in || good_out);
    Ok(report)
}

// ---------------------------------------------------------------- homlem

fn homlem_fuzz(args: &FuzzArgs, seed: u64) -> Result<Report, CliError> {
    let kind = args.field.as_deref().map(parse_field).transpose()?.unwrap_or(FieldKind::Rational);
    let fuzz = match kind {
        FieldKind::Rational => simplicial::homlem_fuzz::<Q>(&(), seed, args.count, args.negatives),
        FieldKind::Prime(p) => simplicial::homlem_fuzz::<Fp>(&p, seed, args.count, args.negatives),
        FieldKind::RationalFunction => return Err(input("homlem-fuzz runs over rational or prime:P")),
    };
    let mut report = Report::new("homlem-fuzz");
    report.put_str("field", kind);
    report.put("seed", fuzz.seed);
    report.put("instances", fuzz.instances);
    report.put("confirmed", fuzz.confirmed);
    report.put("negative_controls", fuzz.negative_controls);
    report.put("negative_detected", fuzz.negative_detected);
    report.put(
        "first_failure",
        fuzz.first_failure.as_ref().map(|i| {
            json!({"n": i.n, "t1": i.t1, "t2": i.t2, "dims": i.dims})
        }),
    );
    report.check("higher homology vanishes and H_0 has the expected dimension", fuzz.confirmed == fuzz.instances);
    report.check(
        "a broken hypothesis is detected",
        fuzz.negative_controls == 0 || fuzz.negative_detected > 0,
    );
    Ok(report)
}

// ---------------------------------------------------------------- glue

fn glue_datum(args: &GlueArgs) -> Result<GluingDatum, CliError> {
    let prime = match args.field.as_deref().map(parse_field).transpose()? {
        None => None,
        Some(FieldKind::Prime(p)) => Some(p),
        Some(other) => return Err(input(format!("glued algebras live over prime:P, not {other}"))),
    };
    load_datum(args.builtin.as_deref(), args.file.as_deref(), prime)
}

fn glue_header(report: &mut Report, args: &GlueArgs, datum: &GluingDatum) {
    report.put(
        "datum",
        args.builtin.clone().unwrap_or_else(|| args.file.as_ref().map(|p| p.display().to_string()).unwrap_or_default()),
    );
    report.put("prime", datum.prime);
    report.put("sites", datum.sites.len());
    if let Some(label) = &datum.coxeter {
        report.put("coxeter", label);
    }
}

fn glue(cmd: &GlueCmd, seed: u64) -> Result<Report, CliError> {
    match cmd {
        GlueCmd::Assemble(args) => glue_assemble(args),
        GlueCmd::Simples(args) => glue_simples(args, seed),
        GlueCmd::K0(args) => glue_k0(args, seed),
        GlueCmd::Supports(args) => glue_supports(args, seed),
    }
}

fn glue_assemble(args: &GlueArgs) -> Result<Report, CliError> {
    let datum = glue_datum(args)?;
    let mut report = Report::new("glue assemble");
    glue_header(&mut report, args, &datum);
    let ga = match datum.assemble() {
        Ok(ga) => ga,
        Err(e @ (GlueError::AssociativityFailure { .. } | GlueError::UnitFailure)) => {
            report.put("failure", e.to_string());
            report.check("associative with unit", false);
            return Ok(report);
        }
        Err(e) => return Err(e.into()),
    };
    let n = ga.n();
    report.put("dim_gamma", ga.dim());
    report.put(
        "block_dims",
        (0..n).map(|i| (0..n).map(|j| ga.block_dim(i, j)).collect::<Vec<_>>()).collect::<Vec<_>>(),
    );
    report.check("associative with unit", true);
    if let Some(label) = &datum.coxeter {
        let sys = CoxeterSystem::from_label(label).map_err(|e| input(e.to_string()))?;
        let wg = datum.check_w_gluing(&sys)?;
        report.put("w_gluing_checked", wg.checked);
        report.put(
            "w_gluing_failures",
            wg.failures
                .iter()
                .map(|&(w, w2, x)| {
                    [w, w2, x].iter().map(|&e| sys.format_element(e)).collect::<Vec<_>>()
                })
                .collect::<Vec<_>>(),
        );
        report.check("compositions bijective along length-additive pairs", wg.ok());
    }
    Ok(report)
}

fn glue_simples(args: &GlueArgs, seed: u64) -> Result<Report, CliError> {
    use rand::SeedableRng;
    let datum = glue_datum(args)?;
    let mut report = Report::new("glue simples");
    glue_header(&mut report, args, &datum);
    report.put("seed", seed);
    let ga = datum.assemble()?;
    report.put("dim_gamma", ga.dim());
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let list = simple_modules(ga.algebra(), args.cap_gamma, &mut rng)?;
    report.put(
        "simples",
        list.simples
            .iter()
            .zip(&list.regular_multiplicities)
            .map(|(s, m)| {
                let restricted: Vec<usize> = (0..ga.n()).map(|k| gluedalg::restrict(&ga, s, k).dim()).collect();
                json!({"dim": s.dim(), "multiplicity_in_gamma": m, "restriction_dims": restricted})
            })
            .collect::<Vec<_>>(),
    );
    report.check("Σ dim S · [Γ : S] = dim Γ", list.accounts_for(ga.algebra()));
    Ok(report)
}

fn int_rows(rows: &[Vec<num_bigint::BigInt>]) -> Vec<Vec<String>> {
    rows.iter().map(|r| r.iter().map(ToString::to_string).collect()).collect()
}

fn glue_k0(args: &GlueArgs, seed: u64) -> Result<Report, CliError> {
    let datum = glue_datum(args)?;
    let mut report = Report::new("glue k0");
    glue_header(&mut report, args, &datum);
    report.put("seed", seed);
    let k0 = gluedalg::k0_verify(&datum, seed, args.cap_gamma)?;
    report.put("site_simple_dims", &k0.site_simple_dims);
    report.put("simple_dims", &k0.simple_dims);
    report.put("classes", &k0.classes);
    report.put(
        "phi",
        k0.phi
            .iter()
            .map(|((i, j), m)| json!({"i": i, "j": j, "matrix": m}))
            .collect::<Vec<_>>(),
    );
    report.put(
        "k_ij",
        k0.k_ij
            .iter()
            .map(|((i, j), s)| json!({"i": i, "j": j, "simples": s}))
            .collect::<Vec<_>>(),
    );
    report.put("k_phi_basis", int_rows(&k0.k_phi));
    report.put("image_basis", int_rows(&k0.image));
    report.check("classes of simples span K(Φ)", k0.equal);
    report.check("classes of simples independent", k0.injective);
    report.check("simples account for Γ", k0.accounted);
    report.check("restrictions of simples are simple or zero", k0.restriction_simple_or_zero);
    report.check("middle extension recovers every simple", k0.middle_extension_roundtrip);
    Ok(report)
}

fn glue_supports(args: &GlueArgs, seed: u64) -> Result<Report, CliError> {
    let datum = glue_datum(args)?;
    let mut report = Report::new("glue supports");
    glue_header(&mut report, args, &datum);
    report.put("seed", seed);
    let sr = gluedalg::support_scan(&datum, seed, args.cap_gamma)?;
    let sys = &sr.system;
    report.put("w_gluing_checked", sr.w_gluing_checked);
    report.put("translate_intersections", sr.intersections);
    let simples: Vec<Value> = sr
        .simples
        .iter()
        .map(|s| {
            json!({
                "dim": s.dim,
                "support": s.support.iter().map(|&w| sys.format_element(w)).collect::<Vec<_>>(),
                "whole": s.whole,
                "translate_intersection": s.translate_intersection,
                "convex": s.convex,
            })
        })
        .collect();
    report.put("simples", simples);
    for (k, s) in sr.simples.iter().enumerate() {
        report.check(&format!("simple {}: support is W or a convex intersection of P_i x", k + 1), s.ok());
    }
    Ok(report)
}

// ---------------------------------------------------------------- counterexample

fn counter(args: &CounterArgs) -> Result<Report, CliError> {
    let sys = require_system(&args.system)?;
    let p_g = args
        .p_g
        .as_deref()
        .map(|s| parse_laurent(s).map_err(|e| input(format!("--p-g: {e}"))))
        .transpose()?;
    let a = counterexample::divisibility_analysis(&sys, p_g, args.cap_order).map_err(|e| input(e.to_string()))?;
    let mut report = Report::new("counterexample");
    report.put("system", system_to_value(&sys));
    report.put("order", a.order);
    report.put_str("poincare", &a.poincare);
    report.put_str("signed_poincare", &a.signed_poincare);
    report.put_str("det_m", &a.det_m);
    report.put("cofactor", a.cofactor.as_ref().map(ToString::to_string));
    report.put("group", &a.group);
    report.put("p_g", a.p_g.as_ref().map(ToString::to_string));
    report.put_str("det_mod_phi6", &a.det_mod_phi6);
    report.put("p_mod_phi6", a.p_g_mod_phi6.as_ref().map(ToString::to_string));
    report.put("coprime_parts", a.coprime_parts.iter().map(ToString::to_string).collect::<Vec<_>>());
    report.put(
        "verdict",
        match a.verdict {
            Verdict::Unsolvable => "unsolvable",
            Verdict::NoObstruction => "no_obstruction",
            Verdict::NotDecided => "not_decided",
        },
    );
    report.check("det M divisible by Σ u^l(w)", a.divisible_by_poincare);
    report.check("det M divisible by Σ (-u)^l(w)", a.divisible_by_signed);
    Ok(report)
}
