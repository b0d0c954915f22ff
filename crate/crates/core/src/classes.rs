//! Conjugacy classes, power maps and the canonical class ordering.
//!
//! Classes are ordered by element order, then class size, then the
//! lexicographically least member, which is also the representative. All
//! column indexing downstream (character tables, Galois actions) follows
//! this order.

use num_integer::Integer;

use crate::group::PermGroup;
use crate::perm::Permutation;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassInfo {
    /// `None` for class data imported without a group.
    pub representative: Option<Permutation>,
    pub size: u64,
    pub element_order: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassData {
    group_order: u64,
    exponent: u64,
    classes: Vec<ClassInfo>,
    /// Element index (in the group's sorted element list) to class index.
    /// Empty for imported class data.
    member_index: Vec<u32>,
    /// `power_table[i][k]` is the class of `x_i^k` for `0 <= k < exponent`.
    power_table: Vec<Vec<u32>>,
    inverse_map: Vec<u32>,
}

impl ClassData {
    pub fn compute(group: &PermGroup) -> ClassData {
        let n = group.order();
        let mut raw_class = vec![u32::MAX; n];
        let mut raw: Vec<(Permutation, Vec<usize>)> = Vec::new();
        // Elements are sorted, so the first unvisited element of each class
        // is its lexicographically least member.
        for start in 0..n {
            if raw_class[start] != u32::MAX {
                continue;
            }
            let id = raw.len() as u32;
            raw_class[start] = id;
            let mut members = vec![start];
            let mut head = 0;
            while head < members.len() {
                let x = group.element(members[head]).clone();
                head += 1;
                for g in group.generators() {
                    let y = g.conjugate(&x);
                    let yi = group.index_of(&y).expect("closed under conjugation");
                    if raw_class[yi] == u32::MAX {
                        raw_class[yi] = id;
                        members.push(yi);
                    }
                }
            }
            raw.push((group.element(start).clone(), members));
        }

        let mut order: Vec<usize> = (0..raw.len()).collect();
        let orders: Vec<u64> = raw.iter().map(|(rep, _)| rep.order()).collect();
        order.sort_by(|&a, &b| {
            (orders[a], raw[a].1.len(), &raw[a].0).cmp(&(orders[b], raw[b].1.len(), &raw[b].0))
        });
        let mut relabel = vec![0u32; raw.len()];
        for (new, &old) in order.iter().enumerate() {
            relabel[old] = new as u32;
        }
        let member_index: Vec<u32> = raw_class.iter().map(|&c| relabel[c as usize]).collect();
        let classes: Vec<ClassInfo> = order
            .iter()
            .map(|&old| ClassInfo {
                representative: Some(raw[old].0.clone()),
                size: raw[old].1.len() as u64,
                element_order: orders[old],
            })
            .collect();

        let exponent = classes
            .iter()
            .fold(1u64, |acc, c| acc.lcm(&c.element_order));
        let power_table: Vec<Vec<u32>> = classes
            .iter()
            .map(|c| {
                let rep = c.representative.as_ref().unwrap();
                let mut row = Vec::with_capacity(exponent as usize);
                let mut y = Permutation::identity(group.degree());
                for _ in 0..exponent {
                    row.push(member_index[group.index_of(&y).unwrap()]);
                    y = y.compose(rep);
                }
                row
            })
            .collect();
        let inverse_map = power_table
            .iter()
            .map(|row| row[(exponent - 1) as usize % exponent as usize])
            .collect();

        ClassData {
            group_order: n as u64,
            exponent,
            classes,
            member_index,
            power_table,
            inverse_map,
        }
    }

    /// Class metadata without representatives (e.g. read from a table file).
    /// The caller is responsible for validating the result.
    pub(crate) fn from_metadata(
        group_order: u64,
        exponent: u64,
        classes: Vec<ClassInfo>,
        power_table: Vec<Vec<u32>>,
    ) -> ClassData {
        let inverse_map = power_table
            .iter()
            .map(|row| row[(exponent as usize).saturating_sub(1) % exponent.max(1) as usize])
            .collect();
        ClassData {
            group_order,
            exponent,
            classes,
            member_index: Vec::new(),
            power_table,
            inverse_map,
        }
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn group_order(&self) -> u64 {
        self.group_order
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn classes(&self) -> &[ClassInfo] {
        &self.classes
    }

    pub fn class(&self, i: usize) -> &ClassInfo {
        &self.classes[i]
    }

    pub fn size(&self, i: usize) -> u64 {
        self.classes[i].size
    }

    pub fn element_order(&self, i: usize) -> u64 {
        self.classes[i].element_order
    }

    pub fn representative(&self, i: usize) -> Option<&Permutation> {
        self.classes[i].representative.as_ref()
    }

    /// Class of the element with the given index in the group's element list.
    pub fn class_of_element(&self, element: usize) -> Option<usize> {
        self.member_index.get(element).map(|&c| c as usize)
    }

    pub fn has_members(&self) -> bool {
        !self.member_index.is_empty()
    }

    /// Class of `x_i^k`; any integer `k`, including negative.
    pub fn power_map(&self, i: usize, k: i64) -> usize {
        let e = self.exponent as i64;
        self.power_table[i][k.rem_euclid(e) as usize] as usize
    }

    pub fn power_table(&self) -> &[Vec<u32>] {
        &self.power_table
    }

    pub fn inverse_class(&self, i: usize) -> usize {
        self.inverse_map[i] as usize
    }

    /// `|C_G(x_i)|` by orbit-stabilizer.
    pub fn centralizer_order(&self, i: usize) -> u64 {
        self.group_order / self.classes[i].size
    }

    pub fn sizes(&self) -> Vec<u64> {
        self.classes.iter().map(|c| c.size).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::Family;

    #[test]
    fn s3_classes_follow_the_ordering_rule() {
        let g = Family::Symmetric(3).build().unwrap();
        let cd = ClassData::compute(&g);
        assert_eq!(cd.len(), 3);
        assert_eq!(cd.sizes(), vec![1, 3, 2]);
        let orders: Vec<u64> = (0..3).map(|i| cd.element_order(i)).collect();
        assert_eq!(orders, vec![1, 2, 3]);
        assert_eq!(cd.centralizer_order(1), 2);
        assert_eq!(cd.centralizer_order(0), 6);
        // Representatives are lexicographically least members.
        assert_eq!(cd.representative(1).unwrap().images(), &[0, 2, 1]);
    }

    #[test]
    fn cyclic_group_is_all_singletons() {
        let g = Family::Cyclic(8).build().unwrap();
        let cd = ClassData::compute(&g);
        assert_eq!(cd.len(), 8);
        assert!(cd.sizes().iter().all(|&s| s == 1));
        assert_eq!(cd.exponent(), 8);
        for i in 0..8 {
            assert_eq!(cd.centralizer_order(i), 8);
        }
    }

    #[test]
    fn power_map_basics() {
        let g = Family::Dihedral(3).build().unwrap();
        let cd = ClassData::compute(&g);
        assert_eq!(cd.len(), 7);
        for i in 0..cd.len() {
            assert_eq!(cd.power_map(i, 1), i);
            assert_eq!(cd.power_map(i, 0), 0);
            let o = cd.element_order(i) as i64;
            for k in -20..20 {
                assert_eq!(cd.power_map(i, k), cd.power_map(i, k + o));
            }
            assert_eq!(cd.inverse_class(cd.inverse_class(i)), i);
        }
    }

    #[test]
    fn trivial_group() {
        let g = PermGroup::from_generators("1", 1, vec![]).unwrap();
        let cd = ClassData::compute(&g);
        assert_eq!(cd.len(), 1);
        assert_eq!(cd.exponent(), 1);
        assert_eq!(cd.power_map(0, 5), 0);
        assert_eq!(cd.inverse_class(0), 0);
    }
}
