//! Galois actions on classes and characters, and the rational/irrational
//! classification built on them.
//!
//! With `n = exp(G)`, a unit `r` mod `n` acts on classes by `x -> x^r` and
//! on characters by applying `zeta_n -> zeta_n^r` to every value. A class or
//! character is rational iff it is fixed by every unit, and its field degree
//! over `Q` is the size of its orbit.

use std::collections::{BTreeSet, HashMap};

use num_integer::Integer;
use serde::Serialize;

use crate::chartable::CharacterTable;
use crate::classes::ClassData;
use crate::cyclo::{euler_phi, Cyclo, GaloisElement};
use crate::error::TableError;
use crate::group::PermGroup;

#[derive(Clone, Debug)]
pub struct GaloisModel {
    modulus: u32,
    elements: Vec<GaloisElement>,
    class_perm: Vec<Vec<u32>>,
    char_perm: Vec<Vec<u32>>,
}

impl GaloisModel {
    /// Materializes both actions. `(s.chi)(x) = chi(x^r)` is checked on every
    /// entry for a generating set of the units; the character permutations
    /// of all other elements follow by composition.
    pub fn build(table: &CharacterTable) -> Result<GaloisModel, TableError> {
        let cd = table.class_data();
        let k = table.len();
        let modulus = cd.exponent() as u32;
        let elements = GaloisElement::units(modulus);
        let row_index: HashMap<&[Cyclo], usize> = table
            .rows()
            .iter()
            .enumerate()
            .map(|(a, r)| (r.as_slice(), a))
            .collect();
        let class_perm: Vec<Vec<u32>> = elements
            .iter()
            .map(|s| (0..k).map(|i| cd.power_map(i, s.r() as i64) as u32).collect())
            .collect();

        let position = |r: u64| elements.iter().position(|s| s.r() as u64 == r).unwrap();
        let mut char_perm: Vec<Option<Vec<u32>>> = vec![None; elements.len()];
        char_perm[0] = Some((0..k as u32).collect());
        let mut generators = Vec::new();
        for s in GaloisElement::unit_generators(modulus) {
            let cp = &class_perm[position(s.r() as u64)];
            let mut xp = Vec::with_capacity(k);
            for (a, row) in table.rows().iter().enumerate() {
                let image: Vec<Cyclo> = cp.iter().map(|&j| row[j as usize].clone()).collect();
                for (i, z) in row.iter().enumerate() {
                    if s.apply(z)? != image[i] {
                        return Err(TableError::InternalInconsistency(format!(
                            "{}: Galois action {s} on character {a} disagrees with x -> x^{} at class {i}",
                            table.name(),
                            s.r()
                        )));
                    }
                }
                let b = row_index.get(image.as_slice()).ok_or_else(|| {
                    TableError::InternalInconsistency(format!(
                        "{}: image of character {a} under {s} is not irreducible",
                        table.name()
                    ))
                })?;
                xp.push(*b as u32);
            }
            generators.push((s.r() as u64, xp));
        }
        // s.(t.chi) = (st).chi, walked breadth-first from the identity.
        let mut queue = vec![0usize];
        let mut head = 0;
        while head < queue.len() {
            let u = queue[head];
            head += 1;
            for (g, gp) in &generators {
                let v = position(elements[u].r() as u64 * g % modulus.max(1) as u64);
                if char_perm[v].is_none() {
                    let up = char_perm[u].as_ref().unwrap();
                    char_perm[v] = Some(up.iter().map(|&a| gp[a as usize]).collect());
                    queue.push(v);
                }
            }
        }
        Ok(GaloisModel {
            modulus,
            elements,
            class_perm,
            char_perm: char_perm.into_iter().map(|p| p.expect("generators reach every unit")).collect(),
        })
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn elements(&self) -> &[GaloisElement] {
        &self.elements
    }

    pub fn class_perm(&self, s: usize) -> &[u32] {
        &self.class_perm[s]
    }

    pub fn char_perm(&self, s: usize) -> &[u32] {
        &self.char_perm[s]
    }

    pub fn class_perms(&self) -> &[Vec<u32>] {
        &self.class_perm
    }

    pub fn char_perms(&self) -> &[Vec<u32>] {
        &self.char_perm
    }

    pub fn index_of(&self, s: &GaloisElement) -> Option<usize> {
        self.elements.iter().position(|t| t == s)
    }
}

/// Orbits of the group generated by `perms` on `0..n`, each sorted, listed
/// by least member.
pub fn orbits(perms: &[Vec<u32>], n: usize) -> Vec<Vec<usize>> {
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut orbit = vec![start];
        let mut head = 0;
        while head < orbit.len() {
            let x = orbit[head];
            head += 1;
            for p in perms {
                let y = p[x] as usize;
                if !seen[y] {
                    seen[y] = true;
                    orbit.push(y);
                }
            }
        }
        orbit.sort_unstable();
        out.push(orbit);
    }
    out
}

/// Cycle lengths of a permutation, sorted.
pub fn cycle_type(p: &[u32]) -> Vec<usize> {
    let mut seen = vec![false; p.len()];
    let mut out = Vec::new();
    for s in 0..p.len() {
        if seen[s] {
            continue;
        }
        let mut len = 0;
        let mut x = s;
        while !seen[x] {
            seen[x] = true;
            x = p[x] as usize;
            len += 1;
        }
        out.push(len);
    }
    out.sort_unstable();
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RationalityReport {
    pub group: String,
    pub order: u64,
    pub exponent: u64,
    pub class_count: usize,
    pub rational_classes: Vec<usize>,
    pub rational_characters: Vec<usize>,
    pub irrational_class_count: usize,
    pub irrational_character_count: usize,
    pub class_orbits: Vec<Vec<usize>>,
    pub character_orbits: Vec<Vec<usize>>,
    /// `[Q(x):Q]` per class.
    pub class_field_degrees: Vec<usize>,
    /// `[Q(chi):Q]` per character.
    pub character_field_degrees: Vec<usize>,
    /// Class indices of the irrational classes; position `t` here is point
    /// `t` of the permutations below.
    pub irrational_classes: Vec<usize>,
    /// Distinct permutations induced on the irrational classes, sorted.
    pub galois_image_on_irrational_classes: Vec<Vec<usize>>,
}

impl RationalityReport {
    pub fn rational_class_count(&self) -> usize {
        self.rational_classes.len()
    }

    pub fn rational_character_count(&self) -> usize {
        self.rational_characters.len()
    }
}

pub fn classify(table: &CharacterTable, model: &GaloisModel) -> RationalityReport {
    let k = table.len();
    let class_orbits = orbits(model.class_perms(), k);
    let character_orbits = orbits(model.char_perms(), k);
    let degrees = |orbs: &[Vec<usize>]| {
        let mut d = vec![0; k];
        for o in orbs {
            for &i in o {
                d[i] = o.len();
            }
        }
        d
    };
    let class_field_degrees = degrees(&class_orbits);
    let character_field_degrees = degrees(&character_orbits);
    let rational_classes: Vec<usize> = (0..k).filter(|&i| class_field_degrees[i] == 1).collect();
    let rational_characters: Vec<usize> = (0..k).filter(|&i| character_field_degrees[i] == 1).collect();
    let irrational_classes: Vec<usize> = (0..k).filter(|&i| class_field_degrees[i] > 1).collect();
    let position: HashMap<usize, usize> = irrational_classes
        .iter()
        .enumerate()
        .map(|(t, &i)| (i, t))
        .collect();
    let image: BTreeSet<Vec<usize>> = model
        .class_perms()
        .iter()
        .map(|p| irrational_classes.iter().map(|&i| position[&(p[i] as usize)]).collect())
        .collect();
    RationalityReport {
        group: table.name().to_string(),
        order: table.order(),
        exponent: table.exponent(),
        class_count: k,
        irrational_class_count: k - rational_classes.len(),
        irrational_character_count: k - rational_characters.len(),
        rational_classes,
        rational_characters,
        class_orbits,
        character_orbits,
        class_field_degrees,
        character_field_degrees,
        galois_image_on_irrational_classes: image.into_iter().collect(),
        irrational_classes,
    }
}

/// The four characterizations of a rational class, computed independently.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassEquivalence {
    pub class: usize,
    /// Every character value at the class is rational.
    pub values_rational: bool,
    /// `x^r` is conjugate to `x` for every `r` coprime to `o(x)`, tested on
    /// the permutations themselves.
    pub conjugate_to_coprime_powers: bool,
    /// Fixed by every Galois element acting through the power map.
    pub galois_fixed: bool,
    /// `|N_G(<x>)/C_G(x)|`.
    pub normalizer_quotient: usize,
    /// `phi(o(x))`.
    pub totient: u64,
    pub agree: bool,
}

impl ClassEquivalence {
    pub fn normalizer_full(&self) -> bool {
        self.normalizer_quotient as u64 == self.totient
    }
}

pub fn check_rationality_equivalences(
    group: &PermGroup,
    table: &CharacterTable,
    model: &GaloisModel,
) -> Vec<ClassEquivalence> {
    let cd = table.class_data();
    (0..table.len())
        .map(|i| {
            let values_rational = table.rows().iter().all(|r| r[i].is_rational());
            let x = cd.representative(i).expect("computed class data has representatives");
            let conjugate_to_coprime_powers = element_is_rational(group, cd, x);
            let galois_fixed = model.class_perms().iter().all(|p| p[i] as usize == i);
            let normalizer_quotient = group.normalizer_cyclic_quotient_order(x);
            let totient = euler_phi(cd.element_order(i));
            let normalizer = normalizer_quotient as u64 == totient;
            ClassEquivalence {
                class: i,
                values_rational,
                conjugate_to_coprime_powers,
                galois_fixed,
                normalizer_quotient,
                totient,
                agree: values_rational == conjugate_to_coprime_powers
                    && values_rational == galois_fixed
                    && values_rational == normalizer,
            }
        })
        .collect()
}

/// Whether `x` is conjugate in `group` to each of its generating powers.
pub fn element_is_rational(group: &PermGroup, classes: &ClassData, x: &crate::perm::Permutation) -> bool {
    let o = x.order();
    let own = classes.class_of_element(group.index_of(x).expect("x in group"));
    (2..o)
        .filter(|r| r.gcd(&o) == 1)
        .all(|r| classes.class_of_element(group.index_of(&x.pow(r as i64)).unwrap()) == own)
}

/// Per-element rationality of a group, read off its character table.
pub fn rational_elements(group: &PermGroup) -> Result<Vec<bool>, TableError> {
    let table = CharacterTable::compute(group)?;
    let cd = table.class_data();
    let rational_class: Vec<bool> = (0..table.len())
        .map(|i| table.rows().iter().all(|r| r[i].is_rational()))
        .collect();
    Ok((0..group.order())
        .map(|x| rational_class[cd.class_of_element(x).unwrap()])
        .collect())
}

/// Tally of one basic-lemma property over an instantiation.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct LemmaOutcome {
    pub property: String,
    pub group: String,
    /// Number of elements (or pairs) meeting the hypothesis.
    pub instances: usize,
    pub failures: Vec<String>,
}

impl LemmaOutcome {
    fn new(property: &str, group: &str) -> Self {
        LemmaOutcome {
            property: property.to_string(),
            group: group.to_string(),
            ..Default::default()
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// (a) rational in `H <= G` implies rational in `G`.
pub fn lemma_subgroup(g: &PermGroup, h: &PermGroup) -> Result<LemmaOutcome, TableError> {
    let mut out = LemmaOutcome::new("a", &format!("{} in {}", h.name(), g.name()));
    let in_h = rational_elements(h)?;
    let in_g = rational_elements(g)?;
    for (xi, x) in h.elements().iter().enumerate() {
        if in_h[xi] {
            out.instances += 1;
            let gi = g.index_of(x).ok_or_else(|| {
                TableError::Group(crate::error::GroupError::InvalidParameter(format!(
                    "{} is not a subgroup of {}",
                    h.name(),
                    g.name()
                )))
            })?;
            if !in_g[gi] {
                out.failures.push(format!("{x} is rational in {} but not in {}", h.name(), g.name()));
            }
        }
    }
    Ok(out)
}

/// (b) and (c) for `G = A x B` with `N = B`, so that `G/N` is `A` and
/// `xN` is the projection of `x` to `A`. Returns the outcomes in that order.
pub fn lemma_quotient(a: &PermGroup, b: &PermGroup) -> Result<(LemmaOutcome, LemmaOutcome), TableError> {
    let g = PermGroup::direct_product(a, b)?;
    let name = format!("{} / {}", g.name(), b.name());
    let mut ob = LemmaOutcome::new("b", &name);
    let mut oc = LemmaOutcome::new("c", &name);
    let in_g = rational_elements(&g)?;
    let in_a = rational_elements(a)?;
    let da = a.degree();
    let n_order = b.order() as u64;
    for (xi, x) in g.elements().iter().enumerate() {
        let proj = crate::perm::Permutation::from_images_unchecked(x.images()[..da].to_vec());
        let pi = a.index_of(&proj).expect("projection lands in the first factor");
        if in_g[xi] {
            ob.instances += 1;
            if !in_a[pi] {
                ob.failures.push(format!("{x} is rational but its image {proj} is not"));
            }
        } else if x.order().gcd(&n_order) == 1 {
            oc.instances += 1;
            if in_a[pi] {
                oc.failures.push(format!("{x} is irrational of order coprime to |N| but {proj} is rational"));
            }
        }
    }
    Ok((ob, oc))
}

/// (d) powers of rational elements are rational.
pub fn lemma_powers(g: &PermGroup) -> Result<LemmaOutcome, TableError> {
    let mut out = LemmaOutcome::new("d", g.name());
    let rat = rational_elements(g)?;
    for (xi, x) in g.elements().iter().enumerate() {
        if !rat[xi] {
            continue;
        }
        out.instances += 1;
        for k in 2..x.order() as i64 {
            let y = x.pow(k);
            if !rat[g.index_of(&y).unwrap()] {
                out.failures.push(format!("{x} is rational but its power {k} is not"));
            }
        }
    }
    Ok(out)
}

/// (e) `x` irrational, `z` in `C_G(x)` of coprime order, then `xz` irrational.
pub fn lemma_coprime_product(g: &PermGroup) -> Result<LemmaOutcome, TableError> {
    let mut out = LemmaOutcome::new("e", g.name());
    let rat = rational_elements(g)?;
    for (xi, x) in g.elements().iter().enumerate() {
        if rat[xi] {
            continue;
        }
        let ox = x.order();
        for z in g.elements() {
            if z.order().gcd(&ox) != 1 || x.compose(z) != z.compose(x) {
                continue;
            }
            out.instances += 1;
            let xz = x.compose(z);
            if rat[g.index_of(&xz).unwrap()] {
                out.failures.push(format!("{x} is irrational, {z} commutes with coprime order, yet the product is rational"));
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::Family;

    fn analyse(f: &str) -> (PermGroup, CharacterTable, GaloisModel, RationalityReport) {
        let g = f.parse::<Family>().unwrap().build().unwrap();
        let t = CharacterTable::compute(&g).unwrap();
        let m = GaloisModel::build(&t).unwrap();
        let r = classify(&t, &m);
        (g, t, m, r)
    }

    #[test]
    fn c3_swaps() {
        let (_, _, m, r) = analyse("cyclic:3");
        let s = m.index_of(&GaloisElement::new(3, 2).unwrap()).unwrap();
        assert_eq!(m.class_perm(s), &[0, 2, 1]);
        assert_eq!(cycle_type(m.char_perm(s)), vec![1, 2]);
        assert_eq!(r.rational_classes, vec![0]);
        assert_eq!(r.irrational_class_count, 2);
    }

    #[test]
    fn c5_four_cycles() {
        let (_, _, m, r) = analyse("cyclic:5");
        let s = m.index_of(&GaloisElement::new(5, 2).unwrap()).unwrap();
        assert_eq!(cycle_type(m.class_perm(s)), vec![1, 4]);
        assert_eq!(cycle_type(m.char_perm(s)), vec![1, 4]);
        assert_eq!(r.class_field_degrees, vec![1, 4, 4, 4, 4]);
        assert_eq!(r.galois_image_on_irrational_classes.len(), 4);
    }

    #[test]
    fn rational_groups_act_trivially() {
        for f in ["symmetric:3", "symmetric:4", "quaternion:2", "dihedral:2"] {
            let (_, t, m, r) = analyse(f);
            assert!(m.class_perms().iter().all(|p| p.iter().enumerate().all(|(i, &j)| i == j as usize)));
            assert!(m.char_perms().iter().all(|p| p.iter().enumerate().all(|(i, &j)| i == j as usize)));
            assert_eq!(r.rational_classes.len(), t.len());
            assert_eq!(r.irrational_character_count, 0);
        }
    }

    #[test]
    fn c8_counts() {
        let (g, _, _, r) = analyse("cyclic:8");
        assert_eq!(r.rational_classes.len(), 2);
        assert_eq!(r.rational_characters.len(), 2);
        assert_eq!(r.irrational_class_count, 6);
        // Independent count: x^k is rational iff x^k has order at most 2.
        let direct = g.elements().iter().filter(|x| x.order() <= 2).count();
        assert_eq!(direct, 2);
    }

    #[test]
    fn d16_has_five_rational_classes() {
        let (_, _, _, r) = analyse("dihedral:3");
        assert_eq!(r.rational_classes.len(), 5);
    }

    #[test]
    fn equivalences_on_d8_and_c5() {
        let (g, t, m, _) = analyse("dihedral:2");
        let eq = check_rationality_equivalences(&g, &t, &m);
        assert!(eq.iter().all(|e| e.agree && e.values_rational));
        let rot = eq.iter().find(|e| t.class_data().element_order(e.class) == 4).unwrap();
        assert_eq!(rot.normalizer_quotient, 2);
        let (g, t, m, _) = analyse("cyclic:5");
        let eq = check_rationality_equivalences(&g, &t, &m);
        assert!(eq.iter().all(|e| e.agree));
        assert!(eq[1..].iter().all(|e| !e.values_rational && e.normalizer_quotient == 1));
        assert!(eq[0].values_rational);
    }

    #[test]
    fn basic_lemma_instances() {
        let d16 = Family::Dihedral(3).build().unwrap();
        let rot = d16.subgroup("C8", vec![d16.generators()[0].clone()]).unwrap();
        assert!(lemma_subgroup(&d16, &rot).unwrap().passed());
        let c3 = Family::Cyclic(3).build().unwrap();
        let c4 = Family::Cyclic(4).build().unwrap();
        let (b, c) = lemma_quotient(&c3, &c4).unwrap();
        assert!(b.passed() && c.passed());
        assert!(b.instances > 0 && c.instances > 0);
        let g = PermGroup::direct_product(&c3, &c4).unwrap();
        let e = lemma_coprime_product(&g).unwrap();
        assert!(e.passed() && e.instances > 0);
        assert!(lemma_powers(&d16).unwrap().passed());
    }
}
