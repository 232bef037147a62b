//! One solver and one checker per task. A certificate is
//! `{task, tool_version, inputs, result, verified}`; the checker reads only
//! `inputs` and `result`.

use serde_json::{json, Map, Value};

use dgal_core::group::{
    density_obstruction, has_ga_or_gm_quotient, kolchin_dense_generators, DensityObstructionCert, Generator,
    GeneratorRole, GeneratorWitness, HighestWeightVector, SideCondition, TriangularElement, Verdict,
};
use dgal_core::obstruction::{solve_obstruction, verify_obstruction, ObstructionCertificate, ObstructionOutcome, ObstructionProblem};
use dgal_core::ore::{q_linear_basis, wronskian_annihilator, AnnihilatorCertificate};
use dgal_core::rational::{QtMatrix, RatFuncXT};
use dgal_core::residue::{chevalley_check, residues, ResidueList};
use dgal_core::telescope::telescope;

use crate::schema::{self, Obj};
use crate::{CliError, CliResult, TOOL_VERSION};

pub const TASKS: [&str; 9] = [
    "telescope",
    "obstruct",
    "annihilate",
    "residues",
    "chevalley",
    "group-check",
    "group-generators",
    "density-obstruct",
    "verify",
];

fn certificate(task: &str, inputs: Value, result: Value) -> Value {
    json!({
        "task": task,
        "tool_version": TOOL_VERSION,
        "inputs": inputs,
        "result": result,
        "verified": true,
    })
}

fn failed(what: impl Into<String>) -> CliError {
    CliError::VerificationFailed(what.into())
}

fn ensure(ok: bool, what: &str) -> CliResult<()> {
    if ok {
        Ok(())
    } else {
        Err(failed(what))
    }
}

pub fn solve(task: &str, p: &Obj) -> CliResult<Value> {
    match task {
        "telescope" => solve_telescope(p),
        "obstruct" => solve_obstruct(p),
        "annihilate" => solve_annihilate(p),
        "residues" => solve_residues(p),
        "chevalley" => solve_chevalley(p),
        "group-check" => solve_group_check(p),
        "group-generators" => solve_group_generators(p),
        "density-obstruct" => solve_density(p),
        "verify" => {
            let inner = schema::field(p, "certificate")?;
            check(inner)?;
            Ok(certificate("verify", json!({ "certificate": inner }), json!({ "verified": true })))
        }
        other => Err(CliError::Malformed(format!(
            "unknown task `{other}`; expected one of {}",
            TASKS.join(", ")
        ))),
    }
}

pub fn check(cert: &Value) -> CliResult<()> {
    let obj = schema::object(cert, "certificate")?;
    let task = schema::string(obj, "task")?;
    let inputs = schema::sub_object(obj, "inputs")?;
    let result = schema::sub_object(obj, "result")?;
    match task {
        "telescope" => check_telescope(inputs, result),
        "obstruct" => check_obstruct(inputs, result),
        "annihilate" => check_annihilate(inputs, result),
        "residues" => check_residues(inputs, result),
        "chevalley" => check_chevalley(inputs, result),
        "group-check" => check_group_check(inputs, result),
        "group-generators" => check_group_generators(inputs, result),
        "density-obstruct" => check_density(inputs, result),
        "verify" => check(schema::field(inputs, "certificate")?),
        other => Err(CliError::Malformed(format!("unknown task `{other}` in certificate"))),
    }
}

fn solve_telescope(p: &Obj) -> CliResult<Value> {
    let f = schema::rational(p, "f")?;
    let c = telescope(&f)?;
    let result = json!({
        "L": c.operator.to_string(),
        "g": c.integral.to_string(),
        "order": c.operator.order(),
        "residues": residue_list_json(&c.residues),
        "residue_basis": schema::t_strings(&c.annihilator.basis),
    });
    Ok(certificate("telescope", json!({ "f": f.to_string() }), result))
}

fn check_telescope(inputs: &Obj, result: &Obj) -> CliResult<()> {
    let f = schema::rational(inputs, "f")?;
    let op = schema::operator(result, "L")?;
    let g = schema::rational(result, "g")?;
    ensure(!op.is_zero(), "L is zero")?;
    ensure(op.apply_equals(&f, &g.d_x()), "L(f) differs from dx g")
}

fn residue_list_json(r: &ResidueList) -> Value {
    json!({
        "finite": r.finite.iter().map(|(loc, res)| json!({
            "pole": loc.to_string(),
            "residue": res.to_string(),
        })).collect::<Vec<_>>(),
        "infinity": r.infinity.to_string(),
    })
}

fn problem_from(inputs: &Obj) -> CliResult<ObstructionProblem> {
    let mut prob = ObstructionProblem::new(schema::rational(inputs, "A")?, schema::rational(inputs, "B")?)?;
    let options = match inputs.get("options") {
        Some(v) => schema::object(v, "options")?.clone(),
        None => Map::new(),
    };
    if let Some(n) = schema::opt_count(&options, "n")? {
        prob = prob.with_pole_order(n)?;
    }
    match (schema::opt_count(&options, "M")?, schema::opt_count(&options, "N")?) {
        (Some(m), Some(big_n)) => prob = prob.with_bounds(m, big_n)?,
        (None, None) => {}
        _ => return Err(CliError::Malformed("bound overrides need both `M` and `N`".into())),
    }
    Ok(prob)
}

fn solve_obstruct(p: &Obj) -> CliResult<Value> {
    let prob = problem_from(p)?;
    let mut inputs = Map::new();
    inputs.insert("A".into(), prob.a.to_string().into());
    inputs.insert("B".into(), prob.b.to_string().into());
    let mut options = Map::new();
    if let Some(o) = p.get("options").and_then(Value::as_object) {
        for key in ["n", "M", "N"] {
            if let Some(v) = o.get(key) {
                options.insert(key.into(), v.clone());
            }
        }
    }
    if !options.is_empty() {
        inputs.insert("options".into(), Value::Object(options));
    }
    let system_json = |s: &dgal_core::obstruction::SystemShape| {
        json!({ "n": s.n, "p": s.p, "M": s.m, "N": s.big_n, "rows": s.rows, "cols": s.cols })
    };
    let result = match solve_obstruction(&prob)? {
        ObstructionOutcome::Certificate(c) => json!({
            "outcome": "certificate",
            "L": c.operator.to_string(),
            "h": c.h.to_string(),
            "system": c.system.as_ref().map(system_json),
        }),
        ObstructionOutcome::Degenerate(d) => json!({
            "outcome": "degenerate",
            "h0": d.h0.to_string(),
            "system": system_json(&d.system),
        }),
    };
    Ok(certificate("obstruct", Value::Object(inputs), result))
}

fn check_obstruct(inputs: &Obj, result: &Obj) -> CliResult<()> {
    let a = schema::rational(inputs, "A")?;
    let b = schema::rational(inputs, "B")?;
    ensure(a.d_t() == b.d_x(), "A and B violate dt A = dx B")?;
    if let Some(s) = result.get("system").filter(|v| !v.is_null()) {
        let s = schema::object(s, "system")?;
        let get = |k: &str| -> CliResult<usize> {
            schema::opt_count(s, k)?.ok_or_else(|| CliError::Malformed(format!("system needs `{k}`")))
        };
        let (n, p, m, big_n) = (get("n")?, get("p")?, get("M")?, get("N")?);
        ensure(get("rows")? == p * (n + big_n) + 1, "row count differs from p(n+N)+1")?;
        ensure(get("cols")? == m + big_n * p + 2, "column count differs from M+Np+2")?;
        ensure(m > n * p && big_n > n * (m - 1), "bounds violate M > np, N > n(M-1)")?;
    }
    match schema::string(result, "outcome")? {
        "certificate" => {
            let c = ObstructionCertificate {
                a,
                b,
                operator: schema::operator(result, "L")?,
                h: schema::rational(result, "h")?,
                system: None,
            };
            ensure(verify_obstruction(&c), "sum of alpha_i R_i differs from dx h + A h")
        }
        "degenerate" => {
            let h0 = schema::rational(result, "h0")?;
            ensure(!h0.is_zero() && h0.d_x().add(&a.mul(&h0)).is_zero(), "h0 is not a kernel element")
        }
        other => Err(CliError::Malformed(format!("unknown obstruction outcome `{other}`"))),
    }
}

fn solve_annihilate(p: &Obj) -> CliResult<Value> {
    let alphas = schema::t_list(p, "alphas")?;
    let c = wronskian_annihilator(&alphas);
    let result = json!({
        "L": c.operator.to_string(),
        "basis": schema::t_strings(&c.basis),
    });
    Ok(certificate("annihilate", json!({ "alphas": schema::t_strings(&alphas) }), result))
}

fn check_annihilate(inputs: &Obj, result: &Obj) -> CliResult<()> {
    let inputs = schema::t_list(inputs, "alphas")?;
    let basis = schema::t_list(result, "basis")?;
    ensure(q_linear_basis(&inputs).len() == basis.len(), "basis size differs from the span dimension")?;
    let c = AnnihilatorCertificate {
        inputs,
        basis,
        operator: schema::operator(result, "L")?,
    };
    ensure(c.verify(), "L is not a monic annihilator of the inputs of the stated order")
}

fn solve_residues(p: &Obj) -> CliResult<Value> {
    let f = schema::rational(p, "f")?;
    let result = residues_result(&f)?;
    Ok(certificate("residues", json!({ "f": f.to_string() }), result))
}

fn residues_result(f: &RatFuncXT) -> CliResult<Value> {
    let r = residues(f)?;
    let mut v = residue_list_json(&r);
    v["sum_is_zero"] = r.sum_is_zero().into();
    Ok(v)
}

fn check_residues(inputs: &Obj, result: &Obj) -> CliResult<()> {
    let fresh = residues_result(&schema::rational(inputs, "f")?)?;
    ensure(Value::Object(result.clone()) == fresh, "residues differ from a recomputation")
}

fn chevalley_result(f: &RatFuncXT) -> CliResult<Value> {
    let report = chevalley_check(f)?;
    let entries: Vec<Value> = report
        .entries
        .iter()
        .map(|e| {
            json!({
                "pole": e.pole.to_string(),
                "residue_of_dt_f": e.residue_of_derivative.to_string(),
                "dt_of_residue": e.derivative_of_residue.to_string(),
                "holds": e.holds,
            })
        })
        .collect();
    Ok(json!({ "entries": entries, "all_hold": report.all_hold() }))
}

fn solve_chevalley(p: &Obj) -> CliResult<Value> {
    let f = schema::rational(p, "f")?;
    let result = chevalley_result(&f)?;
    Ok(certificate("chevalley", json!({ "f": f.to_string() }), result))
}

fn check_chevalley(inputs: &Obj, result: &Obj) -> CliResult<()> {
    let fresh = chevalley_result(&schema::rational(inputs, "f")?)?;
    ensure(Value::Object(result.clone()) == fresh, "report differs from a recomputation")
}

fn group_check_result(inputs: &Obj) -> CliResult<Value> {
    let g = schema::parse_group(schema::field(inputs, "group")?)?;
    let verdict = has_ga_or_gm_quotient(&g)?;
    let witness = match verdict {
        Verdict::None => Value::Null,
        Verdict::Gm => json!({ "central_torus": true }),
        Verdict::Ga { module } => json!({ "trivial_module": module }),
    };
    Ok(json!({ "verdict": verdict.to_string(), "witness": witness }))
}

fn solve_group_check(p: &Obj) -> CliResult<Value> {
    let g = schema::parse_group(schema::field(p, "group")?)?;
    let inputs = json!({ "group": schema::group_json(&g) });
    let result = group_check_result(inputs.as_object().unwrap())?;
    Ok(certificate("group-check", inputs, result))
}

fn check_group_check(inputs: &Obj, result: &Obj) -> CliResult<()> {
    let fresh = group_check_result(inputs)?;
    ensure(Value::Object(result.clone()) == fresh, "verdict differs from a recomputation")
}

fn matrix_json(m: &QtMatrix) -> Value {
    Value::Array((0..m.rows()).map(|i| schema::t_strings(m.row(i))).collect())
}

fn parse_matrix(v: &Value) -> CliResult<QtMatrix> {
    let rows = v.as_array().ok_or_else(|| CliError::Malformed("matrix must be an array of rows".into()))?;
    let rows = rows
        .iter()
        .map(|r| {
            r.as_array()
                .ok_or_else(|| CliError::Malformed("matrix row must be an array".into()))?
                .iter()
                .map(|e| schema::t_value(e, "matrix entry"))
                .collect::<CliResult<Vec<_>>>()
        })
        .collect::<CliResult<Vec<_>>>()?;
    let size = rows.len();
    let m = QtMatrix::from_rows(rows).ok_or_else(|| CliError::Malformed("ragged matrix".into()))?;
    if m.cols() != size {
        return Err(CliError::Malformed("generator matrix must be square".into()));
    }
    Ok(m)
}

fn side_condition_json(c: SideCondition) -> Value {
    match c {
        SideCondition::DeterminantOne { generator } => json!({ "kind": "determinant-one", "generator": generator }),
        SideCondition::TorusEntryNonConstant { generator } => {
            json!({ "kind": "dt-first-entry-nonzero", "generator": generator })
        }
        SideCondition::BorelLineStable { vector, generator } => {
            json!({ "kind": "borel-line-stable", "vector": vector, "generator": generator })
        }
        SideCondition::CosetCount => json!({ "kind": "coset-count" }),
    }
}

fn parse_side_condition(v: &Value) -> CliResult<SideCondition> {
    let o = schema::object(v, "side condition")?;
    let idx = |k: &str| -> CliResult<usize> {
        schema::opt_count(o, k)?.ok_or_else(|| CliError::Malformed(format!("side condition needs `{k}`")))
    };
    Ok(match schema::string(o, "kind")? {
        "determinant-one" => SideCondition::DeterminantOne { generator: idx("generator")? },
        "dt-first-entry-nonzero" => SideCondition::TorusEntryNonConstant { generator: idx("generator")? },
        "borel-line-stable" => SideCondition::BorelLineStable {
            vector: idx("vector")?,
            generator: idx("generator")?,
        },
        "coset-count" => SideCondition::CosetCount,
        other => return Err(CliError::Malformed(format!("unknown side condition `{other}`"))),
    })
}

fn solve_group_generators(p: &Obj) -> CliResult<Value> {
    let g = schema::parse_group(schema::field(p, "group")?)?;
    let w = kolchin_dense_generators(&g)?;
    let factor_names: Vec<String> = match &g.identity {
        dgal_core::group::IdentityComponent::Algebraic(c) => c.semisimple.iter().map(|f| f.to_string()).collect(),
        _ => Vec::new(),
    };
    let generators: Vec<Value> = w
        .generators
        .iter()
        .map(|gen| {
            json!({
                "factor": gen.factor,
                "factor_name": factor_names[gen.factor],
                "role": match gen.role { GeneratorRole::Dense => "dense", GeneratorRole::Torus => "torus" },
                "matrix": matrix_json(&gen.matrix),
            })
        })
        .collect();
    let vectors: Vec<Value> = w
        .highest_weight_vectors
        .iter()
        .map(|h| json!({ "module": h.module, "d": h.d, "vector": schema::t_strings(&h.vector) }))
        .collect();
    let conditions: Vec<Value> = w
        .side_conditions
        .iter()
        .map(|&c| {
            let mut v = side_condition_json(c);
            v["holds"] = w.check(c).into();
            v
        })
        .collect();
    let result = json!({
        "generators": generators,
        "highest_weight_vectors": vectors,
        "coset_representatives": w.coset_representatives,
        "side_conditions": conditions,
        "dense_subset_source": w.dense_subset_source,
    });
    Ok(certificate("group-generators", json!({ "group": schema::group_json(&g) }), result))
}

fn check_group_generators(inputs: &Obj, result: &Obj) -> CliResult<()> {
    let g = schema::parse_group(schema::field(inputs, "group")?)?;
    ensure(has_ga_or_gm_quotient(&g)? == Verdict::None, "group has a Ga or Gm quotient")?;
    let generators = schema::array(result, "generators")?
        .iter()
        .map(|v| {
            let o = schema::object(v, "generator")?;
            let role = match schema::string(o, "role")? {
                "dense" => GeneratorRole::Dense,
                "torus" => GeneratorRole::Torus,
                other => return Err(CliError::Malformed(format!("unknown generator role `{other}`"))),
            };
            Ok(Generator {
                factor: schema::opt_count(o, "factor")?.unwrap_or(0),
                role,
                matrix: parse_matrix(schema::field(o, "matrix")?)?,
            })
        })
        .collect::<CliResult<Vec<_>>>()?;
    let highest_weight_vectors = schema::array(result, "highest_weight_vectors")?
        .iter()
        .map(|v| {
            let o = schema::object(v, "highest weight vector")?;
            let vector = schema::t_list(o, "vector")?;
            let d = schema::opt_count(o, "d")?.ok_or_else(|| CliError::Malformed("vector needs `d`".into()))?;
            if vector.len() != d + 1 {
                return Err(CliError::Malformed("vector length must be d + 1".into()));
            }
            Ok(HighestWeightVector {
                module: schema::opt_count(o, "module")?.unwrap_or(0),
                d,
                vector,
            })
        })
        .collect::<CliResult<Vec<_>>>()?;
    let side_conditions = schema::array(result, "side_conditions")?
        .iter()
        .map(parse_side_condition)
        .collect::<CliResult<Vec<_>>>()?;
    let w = GeneratorWitness {
        generators,
        highest_weight_vectors,
        coset_representatives: schema::opt_count(result, "coset_representatives")?.unwrap_or(0),
        components: g.components,
        side_conditions,
        dense_subset_source: "",
    };
    // every generator must carry its determinant claim
    let all_claimed = (0..w.generators.len())
        .all(|i| w.side_conditions.contains(&SideCondition::DeterminantOne { generator: i }));
    ensure(all_claimed, "a generator lacks its determinant condition")?;
    ensure(w.verify(), "a side condition does not hold")
}

fn parse_elements(obj: &Obj) -> CliResult<Vec<TriangularElement>> {
    schema::array(obj, "generators")?
        .iter()
        .enumerate()
        .map(|(i, v)| {
            let o = schema::object(v, "generator")?;
            Ok(TriangularElement {
                a: schema::t_value(schema::field(o, "a")?, &format!("`generators[{i}].a`"))?,
                b: schema::rat_value(schema::field(o, "b")?, &format!("`generators[{i}].b`"))?,
            })
        })
        .collect()
}

fn elements_json(elements: &[TriangularElement]) -> Value {
    Value::Array(
        elements
            .iter()
            .map(|e| json!({ "a": e.a.to_string(), "b": dgal_core::rational::RatFuncT::from_rat(e.b.clone()).to_string() }))
            .collect(),
    )
}

fn solve_density(p: &Obj) -> CliResult<Value> {
    let elements = parse_elements(p)?;
    let c = density_obstruction(&elements)?;
    let result = json!({
        "L": c.operator.to_string(),
        "closed_supergroup": { "lower_left": "L(a) = 0", "diagonal": "Dt(b) = 0, b != 0" },
    });
    Ok(certificate("density-obstruct", json!({ "generators": elements_json(&elements) }), result))
}

fn check_density(inputs: &Obj, result: &Obj) -> CliResult<()> {
    let c = DensityObstructionCert {
        generators: parse_elements(inputs)?,
        operator: schema::operator(result, "L")?,
    };
    ensure(c.verify(), "L does not annihilate every lower-left entry")
}
