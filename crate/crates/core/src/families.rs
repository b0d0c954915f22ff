//! Named group families.
//!
//! Maximal-class 2-groups follow the presentations
//!
//! * dihedral `<x, y | x^2 = y^(2^n) = 1, yx = xy^-1>`
//! * semidihedral `<x, y | x^2 = y^(2^n) = 1, yx = xy^(2^(n-1) - 1)>`
//! * generalized quaternion `<x, y | x^2 = y^(2^(n-1)), y^(2^n) = 1, yx = xy^-1>`
//!
//! all of order `2^(n+1)`. The dihedral group acts on the vertices of a
//! `2^n`-gon; the other two use the regular representation built from the
//! normal form `x^a y^b`.

use std::fmt;
use std::str::FromStr;

use crate::error::GroupError;
use crate::group::PermGroup;
use crate::perm::Permutation;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Cyclic(u32),
    /// Order `2^(n+1)`.
    Dihedral(u32),
    /// Order `2^(n+1)`.
    Semidihedral(u32),
    /// Order `2^(n+1)`.
    Quaternion(u32),
    Symmetric(u32),
    Alternating(u32),
    Klein,
    /// Affine group of order 20 or `C7 : C3` of order 21.
    Frobenius(u32),
    DirectProduct(Box<Family>, Box<Family>),
}

impl Family {
    pub fn build(&self) -> Result<PermGroup, GroupError> {
        let (degree, gens) = self.generators()?;
        PermGroup::from_generators(self.name(), degree, gens)
    }

    pub fn name(&self) -> String {
        match self {
            Family::Cyclic(n) => format!("C{n}"),
            Family::Dihedral(n) => format!("D{}", 2u64 << n),
            Family::Semidihedral(n) => format!("SD{}", 2u64 << n),
            Family::Quaternion(n) => format!("Q{}", 2u64 << n),
            Family::Symmetric(n) => format!("S{n}"),
            Family::Alternating(n) => format!("A{n}"),
            Family::Klein => "V4".to_string(),
            Family::Frobenius(n) => format!("F{n}"),
            Family::DirectProduct(a, b) => format!("{}x{}", a.name(), b.name()),
        }
    }

    /// Nominal order, computed without building the group.
    pub fn order(&self) -> u64 {
        match self {
            Family::Cyclic(n) => *n as u64,
            Family::Dihedral(n) | Family::Semidihedral(n) | Family::Quaternion(n) => 2u64 << n,
            Family::Symmetric(n) => (1..=*n as u64).product(),
            Family::Alternating(n) => ((1..=*n as u64).product::<u64>() / 2).max(1),
            Family::Klein => 4,
            Family::Frobenius(n) => *n as u64,
            Family::DirectProduct(a, b) => a.order() * b.order(),
        }
    }

    fn generators(&self) -> Result<(usize, Vec<Permutation>), GroupError> {
        let invalid = |msg: String| Err(GroupError::InvalidParameter(msg));
        match *self {
            Family::Cyclic(n) => {
                if n == 0 {
                    return invalid("cyclic group needs n >= 1".into());
                }
                let n = n as usize;
                if n == 1 {
                    return Ok((1, vec![]));
                }
                Ok((n, vec![affine(n, 1, 1)]))
            }
            Family::Dihedral(n) => {
                if !(2..=13).contains(&n) {
                    return invalid(format!("dihedral 2^(n+1) needs 2 <= n <= 13, got {n}"));
                }
                let m = 1usize << n;
                // y = rotation, x = reflection i -> -i.
                Ok((m, vec![affine(m, 1, 1), affine(m, m - 1, 0)]))
            }
            Family::Semidihedral(n) => {
                if !(3..=13).contains(&n) {
                    return invalid(format!("semidihedral 2^(n+1) needs 3 <= n <= 13, got {n}"));
                }
                let m = 1u64 << n;
                Ok(metacyclic_regular(m, (m >> 1) - 1, 0))
            }
            Family::Quaternion(n) => {
                if !(2..=13).contains(&n) {
                    return invalid(format!(
                        "generalized quaternion 2^(n+1) needs 2 <= n <= 13, got {n}"
                    ));
                }
                let m = 1u64 << n;
                Ok(metacyclic_regular(m, m - 1, m >> 1))
            }
            Family::Symmetric(n) => {
                if n == 0 {
                    return invalid("symmetric group needs n >= 1".into());
                }
                let n = n as usize;
                let mut gens = Vec::new();
                if n >= 2 {
                    gens.push(cycle(n, &(0..n as u32).collect::<Vec<_>>()));
                    gens.push(cycle(n, &[0, 1]));
                }
                Ok((n, gens))
            }
            Family::Alternating(n) => {
                if n == 0 {
                    return invalid("alternating group needs n >= 1".into());
                }
                let n = n as usize;
                let gens = (2..n as u32).map(|i| cycle(n, &[0, 1, i])).collect();
                Ok((n, gens))
            }
            Family::Klein => Ok((4, vec![cycle2(4, &[&[0, 1], &[2, 3]]), cycle2(4, &[&[0, 2], &[1, 3]])])),
            Family::Frobenius(order) => match order {
                20 => Ok((5, vec![affine(5, 1, 1), affine(5, 2, 0)])),
                21 => Ok((7, vec![affine(7, 1, 1), affine(7, 2, 0)])),
                _ => invalid(format!("Frobenius family supports orders 20 and 21, got {order}")),
            },
            Family::DirectProduct(ref a, ref b) => {
                let (da, ga) = a.generators()?;
                let (db, gb) = b.generators()?;
                let degree = da + db;
                let mut gens = Vec::with_capacity(ga.len() + gb.len());
                for g in &ga {
                    let mut images: Vec<u32> = g.images().to_vec();
                    images.extend((da as u32)..(degree as u32));
                    gens.push(Permutation::from_images_unchecked(images));
                }
                for g in &gb {
                    let mut images: Vec<u32> = (0..da as u32).collect();
                    images.extend(g.images().iter().map(|&x| x + da as u32));
                    gens.push(Permutation::from_images_unchecked(images));
                }
                Ok((degree, gens))
            }
        }
    }
}

/// `i -> a*i + b (mod n)`.
fn affine(n: usize, a: usize, b: usize) -> Permutation {
    Permutation::from_images_unchecked((0..n).map(|i| ((a * i + b) % n) as u32).collect())
}

fn cycle(n: usize, points: &[u32]) -> Permutation {
    Permutation::from_cycles(n, &[points]).expect("valid cycle")
}

fn cycle2(n: usize, cycles: &[&[u32]]) -> Permutation {
    Permutation::from_cycles(n, cycles).expect("valid cycles")
}

/// Right regular representation of `<x, y | y^m = 1, yx = xy^s, x^2 = y^t>`
/// on the normal forms `x^a y^b`, indexed `a*m + b`.
fn metacyclic_regular(m: u64, s: u64, t: u64) -> (usize, Vec<Permutation>) {
    let mul = |(a, b): (u64, u64), (c, d): (u64, u64)| -> (u64, u64) {
        if c == 0 {
            (a, (b + d) % m)
        } else if a == 0 {
            (1, (s * b + d) % m)
        } else {
            (0, (t + s * b + d) % m)
        }
    };
    let degree = (2 * m) as usize;
    let right = |g: (u64, u64)| {
        Permutation::from_images_unchecked(
            (0..degree as u64)
                .map(|h| {
                    let (a, b) = mul((h / m, h % m), g);
                    (a * m + b) as u32
                })
                .collect(),
        )
    };
    (degree, vec![right((1, 0)), right((0, 1))])
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Cyclic(n) => write!(f, "cyclic:{n}"),
            Family::Dihedral(n) => write!(f, "dihedral:{n}"),
            Family::Semidihedral(n) => write!(f, "semidihedral:{n}"),
            Family::Quaternion(n) => write!(f, "quaternion:{n}"),
            Family::Symmetric(n) => write!(f, "symmetric:{n}"),
            Family::Alternating(n) => write!(f, "alternating:{n}"),
            Family::Klein => write!(f, "klein"),
            Family::Frobenius(n) => write!(f, "frobenius:{n}"),
            Family::DirectProduct(a, b) => write!(f, "{a}*{b}"),
        }
    }
}

/// Parses `name:param` specs such as `dihedral:3` or `klein`, and direct
/// products joined with `*` (e.g. `cyclic:2*symmetric:3`).
impl FromStr for Family {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if let Some((left, right)) = s.rsplit_once('*') {
            return Ok(Family::DirectProduct(
                Box::new(left.parse()?),
                Box::new(right.parse()?),
            ));
        }
        let (name, param) = match s.split_once(':') {
            Some((n, p)) => (n, Some(p)),
            None => (s, None),
        };
        let param = |what: &str| -> Result<u32, GroupError> {
            let p = param.ok_or_else(|| {
                GroupError::InvalidParameter(format!("family `{name}` needs a parameter ({what})"))
            })?;
            p.trim().parse::<u32>().map_err(|_| {
                GroupError::InvalidParameter(format!("`{p}` is not a valid {what} for `{name}`"))
            })
        };
        match name.to_ascii_lowercase().as_str() {
            "cyclic" | "c" => Ok(Family::Cyclic(param("order")?)),
            "dihedral" | "d" => Ok(Family::Dihedral(param("n with order 2^(n+1)")?)),
            "semidihedral" | "sd" => Ok(Family::Semidihedral(param("n with order 2^(n+1)")?)),
            "quaternion" | "generalized_quaternion" | "q" => {
                Ok(Family::Quaternion(param("n with order 2^(n+1)")?))
            }
            "symmetric" | "s" => Ok(Family::Symmetric(param("degree")?)),
            "alternating" | "a" => Ok(Family::Alternating(param("degree")?)),
            "klein" | "v4" => Ok(Family::Klein),
            "frobenius" | "f" => Ok(Family::Frobenius(param("order")?)),
            other => Err(GroupError::InvalidParameter(format!("unknown family `{other}`"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classes::ClassData;

    fn order_and_classes(f: Family) -> (usize, usize) {
        let g = f.build().unwrap();
        (g.order(), ClassData::compute(&g).len())
    }

    #[test]
    fn orders_and_class_counts() {
        assert_eq!(order_and_classes(Family::Dihedral(2)), (8, 5));
        assert_eq!(order_and_classes(Family::Cyclic(5)), (5, 5));
        assert_eq!(order_and_classes(Family::Quaternion(2)), (8, 5));
        assert_eq!(order_and_classes(Family::Dihedral(3)), (16, 7));
        assert_eq!(order_and_classes(Family::Semidihedral(3)), (16, 7));
        assert_eq!(order_and_classes(Family::Quaternion(3)), (16, 7));
        assert_eq!(order_and_classes(Family::Symmetric(4)), (24, 5));
        assert_eq!(order_and_classes(Family::Alternating(5)), (60, 5));
        assert_eq!(order_and_classes(Family::Klein), (4, 4));
        assert_eq!(order_and_classes(Family::Frobenius(20)), (20, 5));
        assert_eq!(order_and_classes(Family::Frobenius(21)), (21, 5));
        assert_eq!(order_and_classes(Family::Cyclic(1)), (1, 1));
        assert_eq!(order_and_classes(Family::Symmetric(1)), (1, 1));
    }

    #[test]
    fn quaternion_class_sizes() {
        let g = Family::Quaternion(2).build().unwrap();
        let mut sizes = ClassData::compute(&g).sizes();
        sizes.sort();
        assert_eq!(sizes, vec![1, 1, 2, 2, 2]);
    }

    #[test]
    fn presentations_hold() {
        // Check the defining relations on the generators of the regular
        // representations: x = gens[0], y = gens[1].
        for (fam, s, x_sq) in [
            (Family::Semidihedral(3), 3i64, 0i64),
            (Family::Semidihedral(4), 7, 0),
            (Family::Quaternion(2), -1, 2),
            (Family::Quaternion(4), -1, 8),
        ] {
            let g = fam.build().unwrap();
            let x = &g.generators()[0];
            let y = &g.generators()[1];
            assert_eq!(y.compose(x), x.compose(&y.pow(s)), "{fam}");
            assert_eq!(x.pow(2), y.pow(x_sq), "{fam}");
            assert_eq!(y.order(), fam.order() / 2);
        }
        let d = Family::Dihedral(3).build().unwrap();
        let x = &d.generators()[1];
        let y = &d.generators()[0];
        assert!(x.pow(2).is_identity());
        assert_eq!(y.order(), 8);
        assert_eq!(y.compose(x), x.compose(&y.inverse()));
    }

    #[test]
    fn direct_products() {
        let f: Family = "cyclic:2*symmetric:3".parse().unwrap();
        assert_eq!(f.name(), "C2xS3");
        let g = f.build().unwrap();
        assert_eq!(g.order(), 12);
        assert_eq!(g.degree(), 5);
        assert_eq!(ClassData::compute(&g).len(), 6);
    }

    #[test]
    fn parsing_and_errors() {
        assert_eq!("dihedral:3".parse::<Family>().unwrap(), Family::Dihedral(3));
        assert_eq!("klein".parse::<Family>().unwrap(), Family::Klein);
        assert!("dihedral".parse::<Family>().is_err());
        assert!("bogus:3".parse::<Family>().is_err());
        assert!(Family::Semidihedral(2).build().is_err());
        assert!(Family::Cyclic(0).build().is_err());
        assert!(Family::Frobenius(22).build().is_err());
        for f in ["cyclic:12", "quaternion:3", "cyclic:2*cyclic:4*klein"] {
            let fam: Family = f.parse().unwrap();
            assert_eq!(fam.to_string().parse::<Family>().unwrap(), fam);
        }
    }
}
