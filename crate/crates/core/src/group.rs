//! Structured descriptions of linear algebraic groups, the check for a 𝔾ₐ
//! or 𝔾ₘ quotient of the identity component, generator witnesses for groups
//! that pass it, and annihilator certificates for finitely generated
//! subgroups of the lower triangular group `{[[1,0],[a,b]] : ∂t b = 0}`.

use std::fmt;

use crate::error::{Error, Result};
use crate::ore::{wronskian_annihilator, OreOperator};
use crate::rational::{Poly, QtMatrix, Rat, RatFuncT};

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SemisimpleFactor {
    SL2,
    SL3,
    /// A factor known only by name; it has no matrix realization here.
    Abstract(String),
}

impl fmt::Display for SemisimpleFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SemisimpleFactor::SL2 => f.write_str("SL2"),
            SemisimpleFactor::SL3 => f.write_str("SL3"),
            SemisimpleFactor::Abstract(tag) => f.write_str(tag),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ModuleAction {
    Trivial,
    Irreducible,
}

/// One summand of the abelianized unipotent radical, as a module over the
/// Levi factor.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UnipotentModule {
    pub dim: usize,
    pub action: ModuleAction,
    pub weight: Option<String>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AlgebraicComponent {
    pub semisimple: Vec<SemisimpleFactor>,
    pub torus_rank: usize,
    pub modules: Vec<UnipotentModule>,
    pub radical_commutative: bool,
}

/// The two differential algebraic groups of lower triangular matrices
/// `[[1,0],[a,b]]`: with `∂t b = 0`, and with `∂t(∂t b / b) = 0`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DiffGroup {
    ConstantDiagonal,
    ExponentialDiagonal,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum IdentityComponent {
    Algebraic(AlgebraicComponent),
    Differential(DiffGroup),
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroupDesc {
    /// Order of `G / G⁰`.
    pub components: usize,
    pub identity: IdentityComponent,
}

impl GroupDesc {
    pub fn connected(c: AlgebraicComponent) -> Self {
        GroupDesc {
            components: 1,
            identity: IdentityComponent::Algebraic(c),
        }
    }

    /// The same description with the unipotent radical replaced by its
    /// abelianization. The module list already describes that quotient.
    pub fn commutativized(&self) -> Self {
        let mut out = self.clone();
        if let IdentityComponent::Algebraic(c) = &mut out.identity {
            c.radical_commutative = true;
        }
        out
    }

    fn algebraic(&self) -> Result<&AlgebraicComponent> {
        if self.components == 0 {
            return Err(Error::InvalidDescription("component count must be positive".into()));
        }
        let c = match &self.identity {
            IdentityComponent::Algebraic(c) => c,
            IdentityComponent::Differential(_) => {
                return Err(Error::UnsupportedDescription(
                    "differential groups have no algebraic quotient check".into(),
                ))
            }
        };
        if let Some(i) = c.modules.iter().position(|m| m.dim == 0) {
            return Err(Error::InvalidDescription(format!("module {i} has dimension 0")));
        }
        let reductive_trivial = c.semisimple.is_empty() && c.torus_rank == 0;
        if reductive_trivial {
            if let Some(i) = c.modules.iter().position(|m| m.action == ModuleAction::Irreducible) {
                return Err(Error::InvalidDescription(format!(
                    "module {i} is nontrivial but the Levi factor is trivial"
                )));
            }
        }
        Ok(c)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Verdict {
    None,
    /// A 𝔾ₘ quotient through the central torus.
    Gm,
    /// A 𝔾ₐ quotient through the trivial summand at this module index.
    Ga { module: usize },
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::None => f.write_str("none"),
            Verdict::Gm => f.write_str("Gm-quotient"),
            Verdict::Ga { .. } => f.write_str("Ga-quotient"),
        }
    }
}

/// A central torus maps onto 𝔾ₘ; otherwise a trivial summand of the
/// abelianized radical maps onto 𝔾ₐ. Nothing else does.
pub fn has_ga_or_gm_quotient(g: &GroupDesc) -> Result<Verdict> {
    let c = g.algebraic()?;
    if c.torus_rank > 0 {
        return Ok(Verdict::Gm);
    }
    Ok(match c.modules.iter().position(|m| m.action == ModuleAction::Trivial) {
        Some(module) => Verdict::Ga { module },
        None => Verdict::None,
    })
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GeneratorRole {
    /// Part of a Zariski-dense finite subset of the factor.
    Dense,
    /// Torus element whose first diagonal entry is `t`.
    Torus,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Generator {
    pub factor: usize,
    pub role: GeneratorRole,
    pub matrix: QtMatrix,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HighestWeightVector {
    pub module: usize,
    /// Highest weight of the SL2 module, so the module is `Sym^d` of the
    /// standard one.
    pub d: usize,
    /// Coordinates in the basis `X^d, X^{d-1} Y, ..., Y^d`.
    pub vector: Vec<RatFuncT>,
}

/// A claim about the witness that can be rechecked from it.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SideCondition {
    DeterminantOne { generator: usize },
    TorusEntryNonConstant { generator: usize },
    /// The generator, acting on the module, maps the line of the highest
    /// weight vector into itself.
    BorelLineStable { vector: usize, generator: usize },
    CosetCount,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GeneratorWitness {
    pub generators: Vec<Generator>,
    pub highest_weight_vectors: Vec<HighestWeightVector>,
    pub coset_representatives: usize,
    pub components: usize,
    pub side_conditions: Vec<SideCondition>,
    /// Provenance of the finite dense subsets, which are standard choices.
    pub dense_subset_source: &'static str,
}

impl GeneratorWitness {
    pub fn check(&self, cond: SideCondition) -> bool {
        match cond {
            SideCondition::DeterminantOne { generator } => self
                .generators
                .get(generator)
                .is_some_and(|g| g.matrix.determinant() == RatFuncT::one()),
            SideCondition::TorusEntryNonConstant { generator } => self
                .generators
                .get(generator)
                .is_some_and(|g| g.matrix.rows() > 0 && !g.matrix.get(0, 0).d_t().is_zero()),
            SideCondition::BorelLineStable { vector, generator } => {
                let (Some(hw), Some(g)) = (self.highest_weight_vectors.get(vector), self.generators.get(generator)) else {
                    return false;
                };
                if g.matrix.rows() != 2 {
                    return false;
                }
                let image = symmetric_power(&g.matrix, hw.d).mul_vec(&hw.vector);
                is_multiple(&image, &hw.vector)
            }
            SideCondition::CosetCount => self.coset_representatives == self.components,
        }
    }

    pub fn verify(&self) -> bool {
        self.side_conditions.iter().all(|&c| self.check(c))
    }
}

fn is_multiple(image: &[RatFuncT], v: &[RatFuncT]) -> bool {
    let Some(k) = v.iter().position(|c| !c.is_zero()) else {
        return false;
    };
    let ratio = image[k].div(&v[k]).unwrap();
    !ratio.is_zero() && image.iter().zip(v).all(|(a, b)| *a == b.mul(&ratio))
}

/// Matrix of `g` acting on binary forms of degree `d`, basis
/// `X^d, X^{d-1} Y, ..., Y^d`, where `X ↦ g_00 X + g_10 Y` and
/// `Y ↦ g_01 X + g_11 Y`.
pub fn symmetric_power(g: &QtMatrix, d: usize) -> QtMatrix {
    // a binary form of degree d is stored as a polynomial in y = Y/X
    let image_x = Poly::from_coeffs(vec![g.get(0, 0).clone(), g.get(1, 0).clone()]);
    let image_y = Poly::from_coeffs(vec![g.get(0, 1).clone(), g.get(1, 1).clone()]);
    let mut out = QtMatrix::zeros(d + 1, d + 1);
    for k in 0..=d {
        let col = image_x.pow((d - k) as u32).mul(&image_y.pow(k as u32));
        for i in 0..=d {
            out.set(i, k, col.coeff(i));
        }
    }
    out
}

fn int_matrix(rows: &[&[i64]]) -> QtMatrix {
    QtMatrix::from_rows(
        rows.iter()
            .map(|r| r.iter().map(|&v| RatFuncT::from_rat(crate::rational::rat(v))).collect())
            .collect(),
    )
    .unwrap()
}

fn torus_element(size: usize) -> QtMatrix {
    let mut m = QtMatrix::zeros(size, size);
    for i in 2..size {
        m.set(i, i, RatFuncT::one());
    }
    m.set(0, 0, RatFuncT::t());
    m.set(1, 1, RatFuncT::t().inv().unwrap());
    m
}

fn factor_generators(factor: &SemisimpleFactor) -> Result<Vec<(GeneratorRole, QtMatrix)>> {
    let dense = match factor {
        SemisimpleFactor::SL2 => vec![int_matrix(&[&[1, 1], &[0, 1]]), int_matrix(&[&[1, 0], &[1, 1]])],
        SemisimpleFactor::SL3 => vec![
            int_matrix(&[&[1, 1, 0], &[0, 1, 0], &[0, 0, 1]]),
            int_matrix(&[&[1, 0, 0], &[0, 1, 1], &[0, 0, 1]]),
            int_matrix(&[&[1, 0, 0], &[1, 1, 0], &[0, 0, 1]]),
            int_matrix(&[&[1, 0, 0], &[0, 1, 0], &[0, 1, 1]]),
        ],
        SemisimpleFactor::Abstract(tag) => return Err(Error::SymbolicOnly { tag: tag.clone() }),
    };
    let size = dense[0].rows();
    let mut out: Vec<_> = dense.into_iter().map(|m| (GeneratorRole::Dense, m)).collect();
    out.push((GeneratorRole::Torus, torus_element(size)));
    Ok(out)
}

/// Generators for a group with no 𝔾ₐ or 𝔾ₘ quotient: a dense finite set and
/// a torus element with entry `t` for each semisimple factor, and a highest
/// weight vector per unipotent module. Every side condition is checked
/// before returning.
pub fn kolchin_dense_generators(g: &GroupDesc) -> Result<GeneratorWitness> {
    let verdict = has_ga_or_gm_quotient(g)?;
    if verdict != Verdict::None {
        return Err(Error::CriterionFails {
            verdict: verdict.to_string(),
        });
    }
    let c = g.algebraic()?;
    let mut generators = Vec::new();
    for (factor, f) in c.semisimple.iter().enumerate() {
        for (role, matrix) in factor_generators(f)? {
            generators.push(Generator { factor, role, matrix });
        }
    }
    if !c.modules.is_empty() && c.semisimple != [SemisimpleFactor::SL2] {
        return Err(Error::UnsupportedDescription(
            "highest weight vectors are synthesized only for modules over a single SL2".into(),
        ));
    }
    let highest_weight_vectors: Vec<HighestWeightVector> = c
        .modules
        .iter()
        .enumerate()
        .map(|(module, m)| {
            let mut vector = vec![RatFuncT::zero(); m.dim];
            vector[0] = RatFuncT::one();
            HighestWeightVector {
                module,
                d: m.dim - 1,
                vector,
            }
        })
        .collect();

    let mut side_conditions = Vec::new();
    for (i, gen) in generators.iter().enumerate() {
        side_conditions.push(SideCondition::DeterminantOne { generator: i });
        if gen.role == GeneratorRole::Torus {
            side_conditions.push(SideCondition::TorusEntryNonConstant { generator: i });
        }
    }
    // the upper unipotent and the torus element generate the Borel subgroup
    let borel: Vec<usize> = generators
        .iter()
        .enumerate()
        .filter(|(_, gen)| gen.matrix.get(1, 0).is_zero())
        .map(|(i, _)| i)
        .collect();
    for v in 0..highest_weight_vectors.len() {
        for &generator in &borel {
            side_conditions.push(SideCondition::BorelLineStable { vector: v, generator });
        }
    }
    side_conditions.push(SideCondition::CosetCount);

    let witness = GeneratorWitness {
        generators,
        highest_weight_vectors,
        coset_representatives: g.components,
        components: g.components,
        side_conditions,
        dense_subset_source: "elementary unipotent matrices with integer entries (external, standard)",
    };
    if let Some(&failed) = witness.side_conditions.iter().find(|&&c| !witness.check(c)) {
        return Err(Error::Internal(format!("side condition {failed:?} does not hold")));
    }
    Ok(witness)
}

/// A generator `[[1,0],[a,b]]` of the constant-diagonal group.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TriangularElement {
    pub a: RatFuncT,
    pub b: Rat,
}

/// The generated group lies in `{[[1,0],[a,b]] : L(a) = 0, ∂t b = 0}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DensityObstructionCert {
    pub generators: Vec<TriangularElement>,
    pub operator: OreOperator,
}

impl DensityObstructionCert {
    pub fn verify(&self) -> bool {
        !self.operator.is_zero()
            && self
                .generators
                .iter()
                .all(|g| !num_traits::Zero::is_zero(&g.b) && self.operator.apply_t(&g.a).is_zero())
    }
}

pub fn density_obstruction(elements: &[TriangularElement]) -> Result<DensityObstructionCert> {
    if let Some(i) = elements.iter().position(|e| num_traits::Zero::is_zero(&e.b)) {
        return Err(Error::InvalidInput(format!("generator {} has zero diagonal entry", i + 1)));
    }
    let entries: Vec<RatFuncT> = elements.iter().map(|e| e.a.clone()).collect();
    let annihilator = wronskian_annihilator(&entries);
    let operator = if annihilator.basis.is_empty() {
        OreOperator::dt()
    } else {
        annihilator.operator
    };
    Ok(DensityObstructionCert {
        generators: elements.to_vec(),
        operator,
    })
}

/// Product of generators; index `k` stands for generator `k` (from 1) and
/// `-k` for its inverse.
pub fn word_eval(generators: &[TriangularElement], word: &[i64]) -> Result<TriangularElement> {
    let mut acc = TriangularElement {
        a: RatFuncT::zero(),
        b: num_traits::One::one(),
    };
    for &k in word {
        let index = k.unsigned_abs() as usize;
        if k == 0 || index > generators.len() {
            return Err(Error::IndexOutOfRange {
                index: k,
                len: generators.len(),
            });
        }
        let g = &generators[index - 1];
        let factor = if k > 0 {
            g.clone()
        } else {
            let inv_b = g.b.recip();
            TriangularElement {
                a: g.a.neg().mul(&RatFuncT::from_rat(inv_b.clone())),
                b: inv_b,
            }
        };
        // [[1,0],[a1,b1]] [[1,0],[a2,b2]] = [[1,0],[a1 + b1 a2, b1 b2]]
        acc = TriangularElement {
            a: acc.a.add(&factor.a.mul(&RatFuncT::from_rat(acc.b.clone()))),
            b: &acc.b * &factor.b,
        };
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse_operator;
    use crate::rational::rat;

    fn sl2_with(modules: Vec<UnipotentModule>) -> GroupDesc {
        GroupDesc::connected(AlgebraicComponent {
            semisimple: vec![SemisimpleFactor::SL2],
            torus_rank: 0,
            modules,
            radical_commutative: true,
        })
    }

    fn irreducible(dim: usize) -> UnipotentModule {
        UnipotentModule {
            dim,
            action: ModuleAction::Irreducible,
            weight: None,
        }
    }

    fn trivial() -> UnipotentModule {
        UnipotentModule {
            dim: 1,
            action: ModuleAction::Trivial,
            weight: None,
        }
    }

    fn elt(a: RatFuncT, b: i64) -> TriangularElement {
        TriangularElement { a, b: rat(b) }
    }

    #[test]
    fn verdicts() {
        assert_eq!(has_ga_or_gm_quotient(&sl2_with(vec![])).unwrap(), Verdict::None);
        let torus = GroupDesc::connected(AlgebraicComponent {
            semisimple: vec![],
            torus_rank: 1,
            modules: vec![],
            radical_commutative: true,
        });
        assert_eq!(has_ga_or_gm_quotient(&torus).unwrap(), Verdict::Gm);
        let mixed = sl2_with(vec![irreducible(3), trivial()]);
        assert_eq!(has_ga_or_gm_quotient(&mixed).unwrap(), Verdict::Ga { module: 1 });
    }

    #[test]
    fn differential_groups_are_unsupported() {
        let g = GroupDesc {
            components: 1,
            identity: IdentityComponent::Differential(DiffGroup::ConstantDiagonal),
        };
        assert_eq!(has_ga_or_gm_quotient(&g).unwrap_err().kind(), "UnsupportedDescription");
    }

    #[test]
    fn invalid_descriptions() {
        let mut g = sl2_with(vec![irreducible(0)]);
        assert_eq!(has_ga_or_gm_quotient(&g).unwrap_err().kind(), "InvalidDescription");
        g = sl2_with(vec![]);
        g.components = 0;
        assert!(has_ga_or_gm_quotient(&g).is_err());
    }

    #[test]
    fn sl2_witness() {
        let w = kolchin_dense_generators(&sl2_with(vec![])).unwrap();
        let mats: Vec<&QtMatrix> = w.generators.iter().map(|g| &g.matrix).collect();
        assert_eq!(*mats[0], int_matrix(&[&[1, 1], &[0, 1]]));
        assert_eq!(*mats[1], int_matrix(&[&[1, 0], &[1, 1]]));
        assert_eq!(*mats[2], torus_element(2));
        assert!(w.verify());
    }

    #[test]
    fn standard_module_witness() {
        let w = kolchin_dense_generators(&sl2_with(vec![irreducible(2)])).unwrap();
        assert_eq!(w.highest_weight_vectors[0].vector, vec![RatFuncT::one(), RatFuncT::zero()]);
        assert!(w.side_conditions.contains(&SideCondition::BorelLineStable { vector: 0, generator: 0 }));
        assert!(w.verify());
        // the lower unipotent moves the line
        assert!(!w.check(SideCondition::BorelLineStable { vector: 0, generator: 1 }));
    }

    #[test]
    fn symmetric_square() {
        let u = int_matrix(&[&[1, 1], &[0, 1]]);
        // X ↦ X, Y ↦ X + Y: X², XY ↦ X² + XY, Y² ↦ X² + 2XY + Y²
        assert_eq!(symmetric_power(&u, 2), int_matrix(&[&[1, 1, 1], &[0, 1, 2], &[0, 0, 1]]));
    }

    #[test]
    fn witness_gates() {
        let torus = GroupDesc::connected(AlgebraicComponent {
            semisimple: vec![SemisimpleFactor::SL2],
            torus_rank: 1,
            modules: vec![],
            radical_commutative: true,
        });
        assert_eq!(kolchin_dense_generators(&torus).unwrap_err().kind(), "CriterionFails");
        let abs = GroupDesc::connected(AlgebraicComponent {
            semisimple: vec![SemisimpleFactor::Abstract("G2".into())],
            torus_rank: 0,
            modules: vec![],
            radical_commutative: true,
        });
        assert_eq!(kolchin_dense_generators(&abs).unwrap_err().kind(), "SymbolicOnly");
    }

    #[test]
    fn density_examples() {
        let t = RatFuncT::t();
        let c = density_obstruction(&[elt(RatFuncT::one(), 2), elt(t.clone(), 2), elt(t.mul(&t), 2)]).unwrap();
        assert_eq!(c.operator, parse_operator("Dt^3").unwrap());
        assert!(c.verify());
        let c = density_obstruction(&[elt(t.clone(), 1)]).unwrap();
        assert_eq!(c.operator, parse_operator("Dt - 1/t").unwrap());
        assert_eq!(density_obstruction(&[]).unwrap().operator, OreOperator::dt());
        assert!(density_obstruction(&[elt(t, 0)]).is_err());
    }

    #[test]
    fn words() {
        let t = RatFuncT::t();
        let gens = [elt(t.clone(), 1), elt(RatFuncT::zero(), 2)];
        let id = word_eval(&gens, &[]).unwrap();
        assert_eq!((id.a, id.b), (RatFuncT::zero(), rat(1)));
        assert_eq!(word_eval(&gens, &[1]).unwrap(), gens[0]);
        // g1 g2 g1⁻¹: a = t + 2·(-t) = -t, b = 2
        let w = word_eval(&gens, &[1, 2, -1]).unwrap();
        assert_eq!((w.a, w.b), (t.neg(), rat(2)));
        assert_eq!(word_eval(&gens, &[3]).unwrap_err().kind(), "IndexOutOfRange");
        assert!(word_eval(&gens, &[0]).is_err());
    }
}
