//! Input parsing: system descriptors, field specs, representation files and
//! gluing-datum files.

use std::path::Path;
use std::sync::Arc;

use serde::Deserialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::braidrep::BraidRepresentation;
use crate::coxeter::{label_matrix, CoxeterSystem};
use crate::exact::parse::{parse_fp, parse_ratfunc, parse_rational};
use crate::exact::{ExactError, FieldKind, Fp, Matrix, RatFunc, Field, Q};
use crate::gluedalg::{self, GlueError, GluingDatum};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CliError {
    /// Malformed or inconsistent input; exit code 2.
    #[error("input error: {0}")]
    Input(String),
    /// A mathematical check failed before a report could be built; exit
    /// code 1.
    #[error("check failed: {0}")]
    Check(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Check(_) => 1,
        }
    }
}

pub(crate) fn input(msg: impl Into<String>) -> CliError {
    CliError::Input(msg.into())
}

impl From<GlueError> for CliError {
    fn from(e: GlueError) -> Self {
        match e {
            GlueError::AssociativityFailure { .. }
            | GlueError::UnitFailure
            | GlueError::NotWGluing(_)
            | GlueError::DerivedCorrectionRequired { .. } => CliError::Check(e.to_string()),
            other => CliError::Input(other.to_string()),
        }
    }
}

/// Field literal scalars are parsed in, chosen at run time.
pub trait CliField: Field {
    fn parse_literal(ctx: &Self::Ctx, s: &str) -> Result<Self, ExactError>;

    /// Value at `u = at`, for fields of rational functions in `u`.
    fn eval_at(&self, _at: &Q) -> Option<Q> {
        None
    }
}

impl CliField for Q {
    fn parse_literal(_: &(), s: &str) -> Result<Self, ExactError> {
        parse_rational(s)
    }
}

impl CliField for RatFunc {
    fn parse_literal(_: &(), s: &str) -> Result<Self, ExactError> {
        parse_ratfunc(s)
    }

    fn eval_at(&self, at: &Q) -> Option<Q> {
        self.eval(at)
    }
}

impl CliField for Fp {
    fn parse_literal(p: &u64, s: &str) -> Result<Self, ExactError> {
        parse_fp(s, *p)
    }
}

/// `rational`, `rational_function`, `prime:P` or `prime(P)`.
pub fn parse_field(s: &str) -> Result<FieldKind, CliError> {
    let t = s.trim();
    match t {
        "rational" | "Q" => return Ok(FieldKind::Rational),
        "rational_function" | "ratfunc" => return Ok(FieldKind::RationalFunction),
        _ => {}
    }
    let p = t
        .strip_prefix("prime:")
        .or_else(|| t.strip_prefix("prime(").and_then(|r| r.strip_suffix(')')))
        .ok_or_else(|| input(format!("unknown field `{t}`; use rational, rational_function or prime:P")))?;
    let p: u64 = p.parse().map_err(|_| input(format!("bad prime in `{t}`")))?;
    FieldKind::prime(p).map_err(|e| input(e.to_string()))
}

fn field_from_value(v: &Value) -> Result<FieldKind, CliError> {
    match v {
        Value::String(s) => parse_field(s),
        Value::Object(o) => {
            let kind = o
                .get("kind")
                .and_then(Value::as_str)
                .ok_or_else(|| input("field: missing `kind`"))?;
            match kind {
                "prime" => {
                    let p = o
                        .get("p")
                        .and_then(Value::as_u64)
                        .ok_or_else(|| input("field: prime kind needs an integer `p`"))?;
                    FieldKind::prime(p).map_err(|e| input(e.to_string()))
                }
                other => parse_field(other),
            }
        }
        _ => Err(input("field: expected a string or an object")),
    }
}

pub fn field_to_value(kind: FieldKind) -> Value {
    match kind {
        FieldKind::Rational => json!({"kind": "rational"}),
        FieldKind::RationalFunction => json!({"kind": "rational_function"}),
        FieldKind::Prime(p) => json!({"kind": "prime", "p": p}),
    }
}

/// `{"type": "A", "rank": 2}`, `{"type": "I2(6)"}`, `{"type": "I", "m": 6}`
/// or `{"matrix": [[1, 3], [3, 1]]}`.
#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SystemDescriptor {
    #[serde(rename = "type")]
    pub ty: Option<String>,
    pub rank: Option<usize>,
    pub m: Option<u32>,
    pub matrix: Option<Vec<Vec<u32>>>,
}

impl SystemDescriptor {
    fn label(&self) -> Result<Option<String>, CliError> {
        let Some(ty) = self.ty.as_deref().map(str::trim) else {
            return Ok(None);
        };
        if let Some(m) = self.m {
            if ty == "I" || ty == "I2" {
                return Ok(Some(format!("I2({m})")));
            }
            return Err(input(format!("system: `m` only applies to type I, not `{ty}`")));
        }
        Ok(Some(match self.rank {
            Some(r) if ty.chars().all(|c| c.is_ascii_alphabetic()) => format!("{ty}{r}"),
            Some(_) => return Err(input(format!("system: `{ty}` already carries a rank"))),
            None => ty.to_string(),
        }))
    }

    pub fn build(&self, cap: usize) -> Result<CoxeterSystem, CliError> {
        let sys = match (self.label()?, &self.matrix) {
            (Some(_), Some(_)) => return Err(input("system: give either a type or a matrix, not both")),
            (Some(label), None) => CoxeterSystem::from_label_with_cap(&label, cap),
            (None, Some(m)) => CoxeterSystem::with_cap(m.clone(), cap),
            (None, None) => return Err(input("system: give a type or a matrix")),
        };
        sys.map_err(|e| input(format!("system: {e}")))
    }
}

/// `1,3;3,1` or `[[1,3],[3,1]]`.
pub fn parse_matrix_flag(s: &str) -> Result<Vec<Vec<u32>>, CliError> {
    let t = s.trim();
    if t.starts_with('[') {
        return serde_json::from_str(t).map_err(|e| input(format!("--matrix: {e}")));
    }
    t.split(';')
        .enumerate()
        .map(|(r, row)| {
            row.split(',')
                .map(|x| {
                    x.trim()
                        .parse::<u32>()
                        .map_err(|_| input(format!("--matrix row {}: bad entry `{}`", r + 1, x.trim())))
                })
                .collect()
        })
        .collect()
}

pub fn system_from_flags(
    ty: Option<&str>,
    matrix: Option<&str>,
    cap: usize,
) -> Result<Option<CoxeterSystem>, CliError> {
    let desc = SystemDescriptor {
        ty: ty.map(str::to_string),
        matrix: matrix.map(parse_matrix_flag).transpose()?,
        ..Default::default()
    };
    if desc.ty.is_none() && desc.matrix.is_none() {
        return Ok(None);
    }
    desc.build(cap).map(Some)
}

pub fn system_to_value(sys: &CoxeterSystem) -> Value {
    match sys.label() {
        Some(l) if label_matrix(l).is_ok() => json!({"type": l}),
        _ => json!({"matrix": sys.coxeter_matrix()}),
    }
}

/// A representation file before its entries are parsed.
#[derive(Clone, Debug)]
pub struct RawRep {
    pub system: Option<SystemDescriptor>,
    pub field: Option<FieldKind>,
    /// `generators[s][row][col]` as literals.
    pub generators: Vec<Vec<Vec<String>>>,
}

fn literal(v: &Value, at: impl Fn() -> String) -> Result<String, CliError> {
    match v {
        Value::String(s) => Ok(s.clone()),
        Value::Number(n) => Ok(n.to_string()),
        _ => Err(input(format!("{}: expected a scalar literal", at()))),
    }
}

pub fn parse_rep_value(v: &Value) -> Result<RawRep, CliError> {
    let obj = v.as_object().ok_or_else(|| input("representation: expected a JSON object"))?;
    if let Some(k) = obj.keys().find(|k| !["system", "field", "generators"].contains(&k.as_str())) {
        return Err(input(format!("representation: unknown key `{k}`")));
    }
    let system = obj
        .get("system")
        .map(|s| SystemDescriptor::deserialize(s).map_err(|e| input(format!("system: {e}"))))
        .transpose()?;
    let field = obj.get("field").map(field_from_value).transpose()?;
    let gens = obj
        .get("generators")
        .and_then(Value::as_array)
        .ok_or_else(|| input("representation: `generators` must be an array of matrices"))?;
    let mut generators = Vec::with_capacity(gens.len());
    for (s, g) in gens.iter().enumerate() {
        let rows = g
            .as_array()
            .ok_or_else(|| input(format!("generator {}: expected an array of rows", s + 1)))?;
        let mut parsed = Vec::with_capacity(rows.len());
        for (r, row) in rows.iter().enumerate() {
            let row = row
                .as_array()
                .ok_or_else(|| input(format!("generator {}, row {}: expected an array", s + 1, r + 1)))?;
            parsed.push(
                row.iter()
                    .enumerate()
                    .map(|(c, x)| literal(x, || format!("generator {}, entry ({}, {})", s + 1, r + 1, c + 1)))
                    .collect::<Result<Vec<_>, _>>()?,
            );
        }
        generators.push(parsed);
    }
    Ok(RawRep {
        system,
        field,
        generators,
    })
}

pub fn read_json(path: &Path) -> Result<Value, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| input(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| input(format!("{}: {e}", path.display())))
}

pub fn read_rep_file(path: &Path) -> Result<RawRep, CliError> {
    parse_rep_value(&read_json(path)?).map_err(|e| match e {
        CliError::Input(m) => input(format!("{}: {m}", path.display())),
        other => other,
    })
}

/// Parse generator literals into square matrices of one common size.
pub fn parse_generators<F: CliField>(ctx: &F::Ctx, raw: &[Vec<Vec<String>>]) -> Result<(usize, Vec<Matrix<F>>), CliError> {
    let dim = raw.first().map_or(0, Vec::len);
    let mut out = Vec::with_capacity(raw.len());
    for (s, g) in raw.iter().enumerate() {
        if g.len() != dim || g.iter().any(|row| row.len() != dim) {
            return Err(input(format!("generator {}: expected a {dim}x{dim} matrix", s + 1)));
        }
        let mut m = Matrix::zeros(ctx, dim, dim);
        for (r, row) in g.iter().enumerate() {
            for (c, x) in row.iter().enumerate() {
                let v = F::parse_literal(ctx, x)
                    .map_err(|e| input(format!("generator {}, entry ({}, {}): {e}", s + 1, r + 1, c + 1)))?;
                m.set(r, c, v);
            }
        }
        out.push(m);
    }
    Ok((dim, out))
}

/// A representation in the file format, so reports can be fed back in.
pub fn rep_to_value<F: Field>(rep: &BraidRepresentation<F>, kind: FieldKind) -> Value {
    let gens: Vec<Vec<Vec<String>>> = rep
        .gens()
        .iter()
        .map(|g| {
            (0..g.nrows())
                .map(|r| (0..g.ncols()).map(|c| g.get(r, c).to_string()).collect())
                .collect()
        })
        .collect();
    json!({
        "system": system_to_value(rep.system()),
        "field": field_to_value(kind),
        "generators": gens,
    })
}

/// Built-in representations: `trivial`, `sign` (every generator acts by
/// `−1`), `scalar` (by `q`) and `hecke` (the regular representation of the
/// Hecke algebra at `q`).
pub fn builtin_rep<F: CliField>(
    name: &str,
    sys: Arc<CoxeterSystem>,
    ctx: &F::Ctx,
    q: Option<&F>,
) -> Result<BraidRepresentation<F>, CliError> {
    let need_q = || q.ok_or_else(|| input(format!("built-in `{name}` needs --q")));
    let rank = sys.rank();
    let rep = match name {
        "trivial" => Ok(BraidRepresentation::trivial(sys, ctx, 1)),
        "sign" => BraidRepresentation::scalar(sys, ctx, 1, &vec![F::one(ctx).neg(); rank]),
        "scalar" => BraidRepresentation::scalar(sys, ctx, 1, &vec![need_q()?.clone(); rank]),
        "hecke" => crate::braidrep::hecke_regular(sys, ctx, need_q()?),
        other => {
            return Err(input(format!(
                "unknown built-in representation `{other}`; choose trivial, sign, scalar or hecke"
            )))
        }
    };
    rep.map_err(|e| input(e.to_string()))
}

/// A gluing datum from `--builtin` or `--file`, with an optional prime
/// override for built-ins.
pub fn load_datum(builtin: Option<&str>, file: Option<&Path>, prime: Option<u64>) -> Result<GluingDatum, CliError> {
    match (builtin, file) {
        (Some(_), Some(_)) => Err(input("give either --builtin or --file, not both")),
        (Some(name), None) => gluedalg::builtin(name, prime.unwrap_or(gluedalg::DEFAULT_PRIME)).map_err(|e| match e {
            GlueError::UnknownBuiltin(n) => input(format!(
                "unknown built-in datum `{n}`; choose one of {}",
                gluedalg::builtin_names().join(", ")
            )),
            other => other.into(),
        }),
        (None, Some(path)) => {
            let datum: GluingDatum = serde_json::from_value(read_json(path)?)
                .map_err(|e| input(format!("{}: {e}", path.display())))?;
            if let Some(p) = prime {
                if p != datum.prime {
                    return Err(input(format!(
                        "{}: datum is over F_{}, not F_{p}",
                        path.display(),
                        datum.prime
                    )));
                }
            }
            Ok(datum)
        }
        (None, None) => Err(input("give --builtin NAME or --file DATUM.json")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_specs() {
        assert_eq!(parse_field("rational").unwrap(), FieldKind::Rational);
        assert_eq!(parse_field("prime:101").unwrap(), FieldKind::Prime(101));
        assert_eq!(parse_field("prime(7)").unwrap(), FieldKind::Prime(7));
        assert!(parse_field("prime:100").is_err());
        assert!(parse_field("reals").is_err());
    }

    #[test]
    fn system_descriptors() {
        let d: SystemDescriptor = serde_json::from_str(r#"{"type":"A","rank":2}"#).unwrap();
        assert_eq!(d.build(100).unwrap().order(), 6);
        let d: SystemDescriptor = serde_json::from_str(r#"{"type":"I","m":6}"#).unwrap();
        assert_eq!(d.build(100).unwrap().order(), 12);
        let d: SystemDescriptor = serde_json::from_str(r#"{"matrix":[[1,4],[4,1]]}"#).unwrap();
        assert_eq!(d.build(100).unwrap().order(), 8);
        assert_eq!(parse_matrix_flag("1,3;3,1").unwrap(), vec![vec![1, 3], vec![3, 1]]);
        assert!(system_from_flags(Some("A3"), None, 10).is_err());
    }

    #[test]
    fn rep_file_round_trip() {
        let v = json!({"system": {"type": "A", "rank": 1}, "field": "rational", "generators": [[["2"]]]});
        let raw = parse_rep_value(&v).unwrap();
        let sys = Arc::new(raw.system.as_ref().unwrap().build(100).unwrap());
        let (dim, gens) = parse_generators::<Q>(&(), &raw.generators).unwrap();
        let rep = BraidRepresentation::new(sys, &(), dim, gens).unwrap();
        let back = parse_rep_value(&rep_to_value(&rep, FieldKind::Rational)).unwrap();
        assert_eq!(back.generators, raw.generators);
    }

    #[test]
    fn entry_errors_name_their_location() {
        let v = json!({"generators": [[["1", "x"], ["0", "1"]]]});
        let raw = parse_rep_value(&v).unwrap();
        let err = parse_generators::<Q>(&(), &raw.generators).unwrap_err();
        assert!(err.to_string().contains("generator 1, entry (1, 2)"), "{err}");
    }
}
