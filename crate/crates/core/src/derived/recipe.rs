//! Checking a finite recipe that builds a complex out of given ones by
//! suspensions, sums, cones and tensoring. Each step must stay inside the
//! localizing subcategory of the inputs, which on invariants means its
//! homological support stays inside the union of the inputs' supports.

use super::{supph, ChainComplex, ChainMap};
use crate::error::{Error, Result};
use crate::zariski::{zar_leq, zar_meet, RadicalIdeal};

#[derive(Debug, Clone)]
pub enum RecipeStep {
    /// One of the supplied generators.
    Generator(usize),
    /// `Σᵏ` of an earlier step.
    Shift { of: usize, by: i64 },
    Sum(usize, usize),
    /// Cone of a chain map between two earlier steps.
    Cone { source: usize, target: usize, map: ChainMap },
    /// Tensor of an earlier step with an arbitrary complex.
    Tensor { of: usize, with: ChainComplex },
}

#[derive(Debug, Clone)]
pub struct RecipeReport {
    /// `supph` of every step, in order.
    pub supports: Vec<RadicalIdeal>,
    /// Whether each step's support lies in the union of the generators'.
    pub inside: Vec<bool>,
    pub result: ChainComplex,
}

impl RecipeReport {
    pub fn pass(&self) -> bool {
        self.inside.iter().all(|&b| b)
    }
}

pub fn verify_recipe(generators: &[ChainComplex], steps: &[RecipeStep]) -> Result<RecipeReport> {
    let ring = generators
        .first()
        .ok_or_else(|| Error::Precondition("a recipe needs at least one generator".into()))?
        .ring()
        .clone();
    // Z(I₁) ∪ ⋯ ∪ Z(Iₖ) = Z(I₁⋯Iₖ)
    let mut union = RadicalIdeal::unit(&ring);
    for g in generators {
        union = zar_meet(&union, &supph(g)?)?;
    }
    let mut built: Vec<ChainComplex> = Vec::new();
    let earlier = |built: &Vec<ChainComplex>, i: usize| -> Result<ChainComplex> {
        built
            .get(i)
            .cloned()
            .ok_or_else(|| Error::Precondition(format!("step {} refers to a later step", i)))
    };
    let mut supports = Vec::new();
    let mut inside = Vec::new();
    for step in steps {
        let c = match step {
            RecipeStep::Generator(i) => generators
                .get(*i)
                .cloned()
                .ok_or_else(|| Error::Precondition(format!("no generator {}", i)))?,
            RecipeStep::Shift { of, by } => earlier(&built, *of)?.shift(*by),
            RecipeStep::Sum(a, b) => earlier(&built, *a)?.direct_sum(&earlier(&built, *b)?)?,
            RecipeStep::Cone { source, target, map } => {
                ChainComplex::cone(map, &earlier(&built, *source)?, &earlier(&built, *target)?)?
            }
            RecipeStep::Tensor { of, with } => earlier(&built, *of)?.tensor(with)?,
        };
        let s = supph(&c)?;
        // Z(s) ⊆ Z(union) iff √union ⊆ √s
        inside.push(zar_leq(&union, &s)?);
        supports.push(s);
        built.push(c);
    }
    let result = built
        .pop()
        .ok_or_else(|| Error::Precondition("empty recipe".into()))?;
    Ok(RecipeReport { supports, inside, result })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::derived::koszul;
    use crate::ring::{Matrix, RingDescriptor};

    fn one_by_one(r: &RingDescriptor, x: i64) -> Matrix {
        Matrix::from_rows(1, 1, vec![vec![r.from_int(x)]]).unwrap()
    }

    #[test]
    fn steps_stay_inside_the_support() {
        let r = RingDescriptor::Integers;
        let k2 = koszul(&r, &[r.from_int(2)]).unwrap();
        let k4 = koszul(&r, &[r.from_int(4)]).unwrap();
        let id = ChainMap::new([(0, one_by_one(&r, 1)), (1, one_by_one(&r, 1))].into());
        let steps = vec![
            RecipeStep::Generator(0),
            RecipeStep::Shift { of: 0, by: 1 },
            RecipeStep::Cone { source: 0, target: 0, map: id },
            RecipeStep::Sum(0, 1),
            RecipeStep::Tensor { of: 3, with: k4 },
        ];
        let rep = verify_recipe(&[k2], &steps).unwrap();
        assert!(rep.pass());
        assert!(rep.supports[2].is_unit().unwrap(), "cone of the identity is acyclic");
        assert!(rep.supports[4].equiv(&RadicalIdeal::parse(&r, &["2"]).unwrap()).unwrap());
    }

    #[test]
    fn cones_need_chain_maps() {
        let r = RingDescriptor::Integers;
        let k2 = koszul(&r, &[r.from_int(2)]).unwrap();
        let k4 = koszul(&r, &[r.from_int(4)]).unwrap();
        // K(2) → K(4): 4·f₁ = f₀·2 forces f₀ = 2f₁
        let good = ChainMap::new([(1, one_by_one(&r, 1)), (0, one_by_one(&r, 2))].into());
        let bad = ChainMap::new([(1, one_by_one(&r, 1)), (0, one_by_one(&r, 1))].into());
        let gens = [k2, k4];
        let steps = |map| {
            vec![
                RecipeStep::Generator(0),
                RecipeStep::Generator(1),
                RecipeStep::Cone { source: 0, target: 1, map },
            ]
        };
        assert!(verify_recipe(&gens, &steps(good)).unwrap().pass());
        assert!(verify_recipe(&gens, &steps(bad)).is_err());
    }

    #[test]
    fn union_of_generators() {
        let r = RingDescriptor::Integers;
        let k2 = koszul(&r, &[r.from_int(2)]).unwrap();
        let k3 = koszul(&r, &[r.from_int(3)]).unwrap();
        let steps = vec![RecipeStep::Generator(0), RecipeStep::Generator(1), RecipeStep::Sum(0, 1)];
        let rep = verify_recipe(&[k2, k3], &steps).unwrap();
        assert!(rep.pass());
        assert!(rep.supports[2].equiv(&RadicalIdeal::parse(&r, &["6"]).unwrap()).unwrap());
        assert!(verify_recipe(&[], &steps).is_err());
    }
}
