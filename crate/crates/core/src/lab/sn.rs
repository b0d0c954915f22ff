//! Exhaustive enumeration of abelian subgroups of small symmetric groups.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use num_integer::Integer;
use serde_json::json;

use super::CheckOutcome;
use crate::cyclo::prime_factors;
use crate::error::LabError;
use crate::families::Family;
use crate::group::PermGroup;

pub fn symmetric_group(n: usize) -> Result<PermGroup, LabError> {
    if n == 0 {
        return Err(LabError::InvalidParameter("degree must be positive".into()));
    }
    if n > 7 {
        return Err(LabError::DegreeTooLarge(n));
    }
    Ok(Family::Symmetric(n as u32).build()?)
}

struct Bits(Vec<u64>);

impl Bits {
    fn new(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64)])
    }
    fn full(n: usize) -> Self {
        let mut b = Bits::new(n);
        for i in 0..n {
            b.set(i);
        }
        b
    }
    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
    fn get(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }
    fn and_with(&mut self, o: &Bits) {
        for (a, b) in self.0.iter_mut().zip(&o.0) {
            *a &= b;
        }
    }
}

/// Every abelian subgroup of `g`, as sorted lists of element indices, in
/// increasing order of size. Each subgroup is reached by adjoining one
/// commuting element at a time to a smaller abelian subgroup.
pub fn abelian_subgroups(g: &PermGroup) -> Vec<Vec<u32>> {
    let n = g.order();
    let commuting: Vec<Bits> = (0..n)
        .map(|i| {
            let a = g.element(i);
            let mut b = Bits::new(n);
            for j in 0..n {
                let c = g.element(j);
                if a.compose(c) == c.compose(a) {
                    b.set(j);
                }
            }
            b
        })
        .collect();

    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    let trivial = vec![0u32];
    seen.insert(trivial.clone());
    let mut queue: Vec<(Vec<u32>, Vec<u32>)> = vec![(trivial, Vec::new())];
    let mut head = 0;
    while head < queue.len() {
        let (elements, gens) = queue[head].clone();
        head += 1;
        let mut central = Bits::full(n);
        for &x in &gens {
            central.and_with(&commuting[x as usize]);
        }
        let mut covered = Bits::new(n);
        for &x in &elements {
            covered.set(x as usize);
        }
        for c in 0..n {
            if !central.get(c) || covered.get(c) {
                continue;
            }
            let mut powers = vec![0usize];
            let mut y = c;
            while y != 0 {
                powers.push(y);
                y = g.mul_index(y, c);
            }
            let mut bigger: BTreeSet<u32> = BTreeSet::new();
            for &a in &elements {
                for &p in &powers {
                    bigger.insert(g.mul_index(a as usize, p) as u32);
                }
            }
            let bigger: Vec<u32> = bigger.into_iter().collect();
            // a * c^j with j prime to o(c) generates the same subgroup with A.
            let o = powers.len();
            for (j, &p) in powers.iter().enumerate() {
                if j.gcd(&o) == 1 {
                    for &a in &elements {
                        covered.set(g.mul_index(a as usize, p));
                    }
                }
            }
            if seen.insert(bigger.clone()) {
                let mut gs = gens.clone();
                gs.push(c as u32);
                queue.push((bigger, gs));
            }
        }
    }
    let mut out: Vec<Vec<u32>> = seen.into_iter().collect();
    out.sort_unstable_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
    out
}

/// Elementary divisors (prime powers, ascending) of an abelian subgroup,
/// from the number of elements whose order divides each prime power.
pub fn elementary_divisors(g: &PermGroup, elements: &[u32]) -> Vec<u64> {
    let orders: Vec<u64> = elements.iter().map(|&x| g.element(x as usize).order()).collect();
    let n = elements.len() as u64;
    let mut out = Vec::new();
    for p in prime_factors(n) {
        // ranks[j] = number of cyclic factors of exponent >= j + 1.
        let mut ranks = Vec::new();
        let mut prev = 1u64;
        let mut q = p;
        loop {
            let count = orders.iter().filter(|&&o| q % o == 0).count() as u64;
            if count == prev {
                break;
            }
            let mut ratio = count / prev;
            let mut r = 0;
            while ratio > 1 {
                ratio /= p;
                r += 1;
            }
            ranks.push(r);
            prev = count;
            q *= p;
        }
        ranks.push(0);
        let mut pj = p;
        for j in 0..ranks.len() - 1 {
            for _ in 0..ranks[j] - ranks[j + 1] {
                out.push(pj);
            }
            pj *= p;
        }
    }
    out.sort_unstable();
    out
}

fn is_cyclic(g: &PermGroup, elements: &[u32]) -> bool {
    elements
        .iter()
        .any(|&x| g.element(x as usize).order() == elements.len() as u64)
}

/// For every abelian subgroup of `S_n` with elementary divisors
/// `q_1, ..., q_k`: `q_1 + ... + q_k <= n`, hence `k <= n/2`.
pub fn abelian_sn_check(n: usize) -> Result<CheckOutcome, LabError> {
    let g = symmetric_group(n)?;
    let name = format!("S{n}");
    let subgroups = abelian_subgroups(&g);
    let mut types: BTreeMap<Vec<u64>, usize> = BTreeMap::new();
    for sub in &subgroups {
        let d = elementary_divisors(&g, sub);
        let sum: u64 = d.iter().sum();
        if sum > n as u64 || 2 * d.len() > n {
            let gens: Vec<String> = sub.iter().map(|&x| g.element(x as usize).to_string()).collect();
            return Ok(CheckOutcome::fail(
                name,
                "abelian_sn",
                json!({ "elementary_divisors": d, "sum": sum, "elements": gens }),
            ));
        }
        *types.entry(d).or_default() += 1;
    }
    let types: Vec<serde_json::Value> = types
        .into_iter()
        .map(|(d, count)| json!({ "elementary_divisors": d, "subgroups": count }))
        .collect();
    Ok(CheckOutcome::pass(
        name,
        "abelian_sn",
        json!({ "abelian_subgroups": subgroups.len(), "types": types }),
    ))
}

/// Every abelian subgroup of `S_4` is cyclic or a Klein four-group, and the
/// Klein subgroups fall into exactly two conjugacy classes.
pub fn s4_abelian_scan() -> CheckOutcome {
    let g = symmetric_group(4).expect("S4 is in range");
    let subgroups = abelian_subgroups(&g);
    let mut cyclic = 0;
    let mut klein: Vec<&Vec<u32>> = Vec::new();
    for sub in &subgroups {
        if is_cyclic(&g, sub) {
            cyclic += 1;
        } else if sub.len() == 4 {
            klein.push(sub);
        } else {
            return CheckOutcome::fail("S4", "s4_abelian", json!({ "non_cyclic_non_klein_order": sub.len() }));
        }
    }
    let canonical = |sub: &Vec<u32>| -> Vec<u32> {
        (0..g.order())
            .map(|t| {
                let t = g.element(t);
                let mut c: Vec<u32> = sub
                    .iter()
                    .map(|&x| g.index_of(&t.conjugate(g.element(x as usize))).unwrap() as u32)
                    .collect();
                c.sort_unstable();
                c
            })
            .min()
            .unwrap()
    };
    let kinds: BTreeSet<Vec<u32>> = klein.iter().map(|s| canonical(s)).collect();
    let w = json!({
        "abelian_subgroups": subgroups.len(),
        "cyclic": cyclic,
        "klein": klein.len(),
        "klein_conjugacy_types": kinds.len(),
    });
    if kinds.len() == 2 {
        CheckOutcome::pass("S4", "s4_abelian", w)
    } else {
        CheckOutcome::fail("S4", "s4_abelian", w)
    }
}

/// Every abelian subgroup of `S_5` in which each point is moved by some
/// element is cyclic.
pub fn s5_fixed_point_free_scan() -> CheckOutcome {
    let g = symmetric_group(5).expect("S5 is in range");
    let mut orders = BTreeSet::new();
    let mut count = 0;
    for sub in abelian_subgroups(&g) {
        let all_moved = (0..5u32).all(|pt| sub.iter().any(|&x| g.element(x as usize).apply(pt) != pt));
        if !all_moved {
            continue;
        }
        count += 1;
        if !is_cyclic(&g, &sub) {
            let elements: Vec<String> = sub.iter().map(|&x| g.element(x as usize).to_string()).collect();
            return CheckOutcome::fail("S5", "s5_fixed_point_free", json!({ "elements": elements }));
        }
        orders.insert(sub.len());
    }
    CheckOutcome::pass(
        "S5",
        "s5_fixed_point_free",
        json!({ "subgroups": count, "orders": orders }),
    )
}
