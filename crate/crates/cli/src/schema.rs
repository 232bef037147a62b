//! Field access on JSON objects and the text forms of domain values.

use serde_json::{json, Map, Value};

use dgal_core::expr::{parse_operator, parse_rat, parse_rational, parse_t};
use dgal_core::group::{
    AlgebraicComponent, DiffGroup, GroupDesc, IdentityComponent, ModuleAction, SemisimpleFactor, UnipotentModule,
};
use dgal_core::ore::OreOperator;
use dgal_core::rational::{Rat, RatFuncT, RatFuncXT};
use dgal_core::Error;

use crate::{CliError, CliResult};

pub type Obj = Map<String, Value>;

fn malformed(msg: impl Into<String>) -> CliError {
    CliError::Malformed(msg.into())
}

pub fn object<'a>(v: &'a Value, what: &str) -> CliResult<&'a Obj> {
    v.as_object().ok_or_else(|| malformed(format!("{what} must be a JSON object")))
}

pub fn field<'a>(obj: &'a Obj, key: &str) -> CliResult<&'a Value> {
    obj.get(key).ok_or_else(|| malformed(format!("missing field `{key}`")))
}

pub fn string<'a>(obj: &'a Obj, key: &str) -> CliResult<&'a str> {
    field(obj, key)?
        .as_str()
        .ok_or_else(|| malformed(format!("field `{key}` must be a string")))
}

pub fn array<'a>(obj: &'a Obj, key: &str) -> CliResult<&'a Vec<Value>> {
    field(obj, key)?
        .as_array()
        .ok_or_else(|| malformed(format!("field `{key}` must be an array")))
}

pub fn sub_object<'a>(obj: &'a Obj, key: &str) -> CliResult<&'a Obj> {
    object(field(obj, key)?, &format!("field `{key}`"))
}

/// A nonnegative integer, absent allowed.
pub fn opt_count(obj: &Obj, key: &str) -> CliResult<Option<usize>> {
    match obj.get(key) {
        None | Some(Value::Null) => Ok(None),
        Some(v) => v
            .as_u64()
            .and_then(|n| usize::try_from(n).ok())
            .map(Some)
            .ok_or_else(|| malformed(format!("field `{key}` must be a nonnegative integer"))),
    }
}

pub fn bool_or(obj: &Obj, key: &str, default: bool) -> CliResult<bool> {
    match obj.get(key) {
        None | Some(Value::Null) => Ok(default),
        Some(v) => v.as_bool().ok_or_else(|| malformed(format!("field `{key}` must be a boolean"))),
    }
}

fn str_of<'a>(v: &'a Value, what: &str) -> CliResult<&'a str> {
    v.as_str().ok_or_else(|| malformed(format!("{what} must be a string")))
}

pub fn rational(obj: &Obj, key: &str) -> CliResult<RatFuncXT> {
    Ok(parse_rational(string(obj, key)?)?)
}

pub fn operator(obj: &Obj, key: &str) -> CliResult<OreOperator> {
    Ok(parse_operator(string(obj, key)?)?)
}

pub fn t_value(v: &Value, what: &str) -> CliResult<RatFuncT> {
    Ok(parse_t(str_of(v, what)?)?)
}

pub fn t_list(obj: &Obj, key: &str) -> CliResult<Vec<RatFuncT>> {
    array(obj, key)?
        .iter()
        .enumerate()
        .map(|(i, v)| t_value(v, &format!("`{key}[{i}]`")))
        .collect()
}

/// A rational constant given as a JSON integer or as an expression string.
pub fn rat_value(v: &Value, what: &str) -> CliResult<Rat> {
    if let Some(n) = v.as_i64() {
        return Ok(Rat::from_integer(n.into()));
    }
    if v.is_number() {
        return Err(malformed(format!("{what} must be an integer or an exact fraction string")));
    }
    Ok(parse_rat(str_of(v, what)?)?)
}

pub fn t_strings(items: &[RatFuncT]) -> Value {
    Value::Array(items.iter().map(|v| v.to_string().into()).collect())
}

pub fn error_details(e: &Error) -> Value {
    match e {
        Error::NonSplitDenominator { factor } => json!({ "factor": factor }),
        Error::NonzeroResidue { pole, residue } => json!({ "pole": pole, "residue": residue }),
        Error::IntegrabilityViolation { dt_a, dx_b } => json!({ "dt_A": dt_a, "dx_B": dx_b }),
        Error::CriterionFails { verdict } => json!({ "verdict": verdict }),
        Error::SymbolicOnly { tag } => json!({ "factor": tag }),
        Error::IndexOutOfRange { index, len } => json!({ "index": index, "generators": len }),
        Error::PoleAtPoint { x, t } => json!({ "x": x, "t": t }),
        _ => Value::Null,
    }
}

pub fn parse_group(v: &Value) -> CliResult<GroupDesc> {
    let obj = object(v, "group")?;
    let components = opt_count(obj, "components")?.unwrap_or(1);
    if let Some(d) = obj.get("differential") {
        let variant = match str_of(d, "`differential`")? {
            "constant-diagonal" => DiffGroup::ConstantDiagonal,
            "exponential-diagonal" => DiffGroup::ExponentialDiagonal,
            other => return Err(malformed(format!("unknown differential group `{other}`"))),
        };
        return Ok(GroupDesc {
            components,
            identity: IdentityComponent::Differential(variant),
        });
    }
    let semisimple = match obj.get("semisimple") {
        None => Vec::new(),
        Some(_) => array(obj, "semisimple")?
            .iter()
            .map(|f| match f {
                Value::String(s) if s == "SL2" => Ok(SemisimpleFactor::SL2),
                Value::String(s) if s == "SL3" => Ok(SemisimpleFactor::SL3),
                Value::Object(o) => Ok(SemisimpleFactor::Abstract(string(o, "abstract")?.to_owned())),
                other => Err(malformed(format!(
                    "semisimple factor {other} is neither \"SL2\", \"SL3\" nor {{\"abstract\": tag}}"
                ))),
            })
            .collect::<CliResult<_>>()?,
    };
    let modules = match obj.get("modules") {
        None => Vec::new(),
        Some(_) => array(obj, "modules")?
            .iter()
            .map(|m| {
                let o = object(m, "module")?;
                let dim = opt_count(o, "dim")?.ok_or_else(|| malformed("module needs `dim`"))?;
                let action = match string(o, "action")? {
                    "trivial" => ModuleAction::Trivial,
                    "irreducible" => ModuleAction::Irreducible,
                    other => return Err(malformed(format!("unknown module action `{other}`"))),
                };
                let weight = match o.get("weight") {
                    None | Some(Value::Null) => None,
                    Some(w) => Some(str_of(w, "`weight`")?.to_owned()),
                };
                Ok(UnipotentModule { dim, action, weight })
            })
            .collect::<CliResult<_>>()?,
    };
    Ok(GroupDesc {
        components,
        identity: IdentityComponent::Algebraic(AlgebraicComponent {
            semisimple,
            torus_rank: opt_count(obj, "torus_rank")?.unwrap_or(0),
            modules,
            radical_commutative: bool_or(obj, "radical_commutative", true)?,
        }),
    })
}

/// Canonical echo of a parsed group description.
pub fn group_json(g: &GroupDesc) -> Value {
    let mut obj = Map::new();
    obj.insert("components".into(), g.components.into());
    match &g.identity {
        IdentityComponent::Differential(d) => {
            let name = match d {
                DiffGroup::ConstantDiagonal => "constant-diagonal",
                DiffGroup::ExponentialDiagonal => "exponential-diagonal",
            };
            obj.insert("differential".into(), name.into());
        }
        IdentityComponent::Algebraic(c) => {
            let factors = c
                .semisimple
                .iter()
                .map(|f| match f {
                    SemisimpleFactor::Abstract(tag) => json!({ "abstract": tag }),
                    other => other.to_string().into(),
                })
                .collect();
            obj.insert("semisimple".into(), Value::Array(factors));
            obj.insert("torus_rank".into(), c.torus_rank.into());
            let modules = c
                .modules
                .iter()
                .map(|m| {
                    let mut o = Map::new();
                    o.insert("dim".into(), m.dim.into());
                    let action = match m.action {
                        ModuleAction::Trivial => "trivial",
                        ModuleAction::Irreducible => "irreducible",
                    };
                    o.insert("action".into(), action.into());
                    if let Some(w) = &m.weight {
                        o.insert("weight".into(), w.clone().into());
                    }
                    Value::Object(o)
                })
                .collect();
            obj.insert("modules".into(), Value::Array(modules));
            obj.insert("radical_commutative".into(), c.radical_commutative.into());
        }
    }
    Value::Object(obj)
}
