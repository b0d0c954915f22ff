//! Permutation groups with fully enumerated element lists.

use std::collections::{HashMap, HashSet};

use num_integer::Integer;

use crate::error::GroupError;
use crate::perm::Permutation;

pub const DEFAULT_ORDER_CAP: usize = 20_000;

/// A finite group given by permutation generators. Elements are enumerated
/// at construction and kept sorted lexicographically by image array, so
/// index 0 is always the identity.
#[derive(Clone, Debug)]
pub struct PermGroup {
    name: String,
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, u32>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivedSeries {
    /// Orders of `G, G', G'', ...` down to the point where the series stabilizes.
    pub orders: Vec<usize>,
    pub solvable: bool,
}

impl PermGroup {
    pub fn from_generators(
        name: impl Into<String>,
        degree: usize,
        generators: Vec<Permutation>,
    ) -> Result<Self, GroupError> {
        Self::with_cap(name, degree, generators, DEFAULT_ORDER_CAP)
    }

    pub fn with_cap(
        name: impl Into<String>,
        degree: usize,
        generators: Vec<Permutation>,
        cap: usize,
    ) -> Result<Self, GroupError> {
        for (i, g) in generators.iter().enumerate() {
            if g.degree() != degree {
                return Err(GroupError::InvalidPermutation(format!(
                    "generator {i} has degree {} but the group has degree {degree}",
                    g.degree()
                )));
            }
        }
        let mut elements = close_under(degree, &generators, cap)?;
        elements.sort_unstable();
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i as u32))
            .collect();
        Ok(PermGroup {
            name: name.into(),
            degree,
            generators,
            elements,
            index,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn set_name(&mut self, name: impl Into<String>) {
        self.name = name.into();
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).map(|&i| i as usize)
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.index.contains_key(p)
    }

    /// Index of the product `elements[a] * elements[b]`.
    pub fn mul_index(&self, a: usize, b: usize) -> usize {
        let p = self.elements[a].compose(&self.elements[b]);
        self.index[&p] as usize
    }

    pub fn inverse_index(&self, a: usize) -> usize {
        self.index[&self.elements[a].inverse()] as usize
    }

    pub fn exponent(&self) -> u64 {
        self.elements
            .iter()
            .fold(1u64, |acc, p| acc.lcm(&p.order()))
    }

    pub fn is_abelian(&self) -> bool {
        self.generators.iter().enumerate().all(|(i, a)| {
            self.generators[i + 1..]
                .iter()
                .all(|b| a.compose(b) == b.compose(a))
        })
    }

    /// `|C_G(x)|` by direct count of commuting elements.
    pub fn centralizer_order_direct(&self, x: &Permutation) -> usize {
        self.elements
            .iter()
            .filter(|g| g.compose(x) == x.compose(g))
            .count()
    }

    /// `|N_G(<x>)| / |C_G(x)|`, counting the elements whose conjugation
    /// action maps `x` into the cyclic subgroup it generates.
    pub fn normalizer_cyclic_quotient_order(&self, x: &Permutation) -> usize {
        let mut powers = HashSet::new();
        let mut y = Permutation::identity(self.degree);
        loop {
            powers.insert(y.clone());
            y = y.compose(x);
            if y.is_identity() {
                break;
            }
        }
        let mut normalizer = 0usize;
        let mut centralizer = 0usize;
        for g in &self.elements {
            let c = g.conjugate(x);
            if c == *x {
                centralizer += 1;
                normalizer += 1;
            } else if powers.contains(&c) {
                normalizer += 1;
            }
        }
        normalizer / centralizer
    }

    /// Derived series by commutator closure. Each term is the subgroup
    /// generated by all commutators of elements of the previous term.
    pub fn derived_series(&self) -> DerivedSeries {
        let mut current: Vec<Permutation> = self.elements.clone();
        let mut orders = vec![current.len()];
        loop {
            if current.len() == 1 {
                return DerivedSeries {
                    orders,
                    solvable: true,
                };
            }
            let mut commutators = HashSet::new();
            for (i, a) in current.iter().enumerate() {
                for b in &current[i + 1..] {
                    let c = a.commutator(b);
                    if !c.is_identity() {
                        commutators.insert(c);
                    }
                }
            }
            let mut gens: Vec<Permutation> = commutators.into_iter().collect();
            gens.sort_unstable();
            let next = generate_subgroup(self.degree, gens);
            if next.len() == current.len() {
                return DerivedSeries {
                    orders,
                    solvable: false,
                };
            }
            orders.push(next.len());
            current = next;
        }
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series().solvable
    }

    /// `A x B` acting on the disjoint union of the two point sets, `A` first.
    pub fn direct_product(a: &PermGroup, b: &PermGroup) -> Result<PermGroup, GroupError> {
        let (da, db) = (a.degree, b.degree);
        let mut gens = Vec::with_capacity(a.generators.len() + b.generators.len());
        for g in &a.generators {
            gens.push(Permutation::from_images_unchecked(
                g.images().iter().copied().chain(da as u32..(da + db) as u32).collect(),
            ));
        }
        for g in &b.generators {
            gens.push(Permutation::from_images_unchecked(
                (0..da as u32).chain(g.images().iter().map(|&x| x + da as u32)).collect(),
            ));
        }
        PermGroup::from_generators(format!("{}x{}", a.name, b.name), da + db, gens)
    }

    /// Subgroup generated by `generators`, which must lie in this group.
    pub fn subgroup(&self, name: impl Into<String>, generators: Vec<Permutation>) -> Result<PermGroup, GroupError> {
        if let Some(g) = generators.iter().find(|g| !self.contains(g)) {
            return Err(GroupError::InvalidParameter(format!("{g} is not an element of {}", self.name)));
        }
        PermGroup::from_generators(name, self.degree, generators)
    }
}

/// Breadth-first product closure: every element is reached as a product of
/// generators, and since the group is finite that closure is the group.
fn close_under(
    degree: usize,
    generators: &[Permutation],
    cap: usize,
) -> Result<Vec<Permutation>, GroupError> {
    let id = Permutation::identity(degree);
    let mut seen: HashSet<Permutation> = HashSet::new();
    seen.insert(id.clone());
    let mut elements = vec![id];
    let mut head = 0;
    while head < elements.len() {
        let x = elements[head].clone();
        head += 1;
        for g in generators {
            let y = x.compose(g);
            if !seen.contains(&y) {
                if elements.len() >= cap {
                    return Err(GroupError::OrderCapExceeded { cap });
                }
                seen.insert(y.clone());
                elements.push(y);
            }
        }
    }
    Ok(elements)
}

/// Subgroup generated by `candidates`, adding candidates one at a time and
/// skipping those already inside the current subgroup. Returns the elements
/// in sorted order.
pub(crate) fn generate_subgroup(degree: usize, candidates: Vec<Permutation>) -> Vec<Permutation> {
    let id = Permutation::identity(degree);
    let mut set: HashSet<Permutation> = HashSet::new();
    set.insert(id.clone());
    let mut elements = vec![id];
    let mut gens: Vec<Permutation> = Vec::new();
    for g in candidates {
        if set.contains(&g) {
            continue;
        }
        gens.push(g.clone());
        // Old elements are closed under the old generators; they only need
        // the new one. Newly found elements need all of them.
        let old_len = elements.len();
        let mut fresh = Vec::new();
        for x in &elements[..old_len] {
            let y = x.compose(&g);
            if set.insert(y.clone()) {
                fresh.push(y);
            }
        }
        let mut head = 0;
        while head < fresh.len() {
            let x = fresh[head].clone();
            head += 1;
            for h in &gens {
                let y = x.compose(h);
                if set.insert(y.clone()) {
                    fresh.push(y);
                }
            }
        }
        elements.extend(fresh);
    }
    elements.sort_unstable();
    elements
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(degree: usize, cycles: &[&[u32]]) -> Permutation {
        Permutation::from_cycles(degree, cycles).unwrap()
    }

    fn s3() -> PermGroup {
        PermGroup::from_generators("S3", 3, vec![cyc(3, &[&[0, 1, 2]]), cyc(3, &[&[0, 1]])]).unwrap()
    }

    #[test]
    fn closure_orders() {
        assert_eq!(s3().order(), 6);
        let trivial = PermGroup::from_generators("1", 1, vec![]).unwrap();
        assert_eq!(trivial.order(), 1);
        let c4 = PermGroup::from_generators("C4", 4, vec![cyc(4, &[&[0, 1, 2, 3]])]).unwrap();
        assert_eq!(c4.order(), 4);
        assert_eq!(c4.exponent(), 4);
        assert!(s3().element(0).is_identity());
    }

    #[test]
    fn cap_is_enforced() {
        let s5 = vec![cyc(5, &[&[0, 1, 2, 3, 4]]), cyc(5, &[&[0, 1]])];
        let err = PermGroup::with_cap("S5", 5, s5, 100).unwrap_err();
        assert_eq!(err, GroupError::OrderCapExceeded { cap: 100 });
    }

    #[test]
    fn mismatched_generator_degree() {
        let err = PermGroup::from_generators("x", 4, vec![cyc(3, &[&[0, 1]])]).unwrap_err();
        assert!(matches!(err, GroupError::InvalidPermutation(_)));
    }

    #[test]
    fn closure_under_products_and_inverses() {
        let g = s3();
        for a in g.elements() {
            assert!(g.contains(&a.inverse()));
            for b in g.elements() {
                assert!(g.contains(&a.compose(b)));
            }
        }
    }

    #[test]
    fn derived_series_of_small_groups() {
        let ds = s3().derived_series();
        assert_eq!(ds.orders, vec![6, 3, 1]);
        assert!(ds.solvable);

        let c5 = PermGroup::from_generators("C5", 5, vec![cyc(5, &[&[0, 1, 2, 3, 4]])]).unwrap();
        assert_eq!(c5.derived_series().orders, vec![5, 1]);

        let s5 = PermGroup::from_generators(
            "S5",
            5,
            vec![cyc(5, &[&[0, 1, 2, 3, 4]]), cyc(5, &[&[0, 1]])],
        )
        .unwrap();
        let ds = s5.derived_series();
        assert_eq!(ds.orders, vec![120, 60]);
        assert!(!ds.solvable);
    }

    #[test]
    fn normalizer_quotients() {
        // D8 acting on a square: rotation r of order 4 is inverted by a reflection.
        let d8 = PermGroup::from_generators(
            "D8",
            4,
            vec![cyc(4, &[&[0, 1, 2, 3]]), cyc(4, &[&[0, 2]])],
        )
        .unwrap();
        let r = cyc(4, &[&[0, 1, 2, 3]]);
        assert_eq!(d8.normalizer_cyclic_quotient_order(&r), 2);
        assert_eq!(d8.centralizer_order_direct(&r), 4);

        let c5 = PermGroup::from_generators("C5", 5, vec![cyc(5, &[&[0, 1, 2, 3, 4]])]).unwrap();
        assert_eq!(c5.normalizer_cyclic_quotient_order(&cyc(5, &[&[0, 1, 2, 3, 4]])), 1);
        assert_eq!(c5.normalizer_cyclic_quotient_order(&Permutation::identity(5)), 1);
    }
}
