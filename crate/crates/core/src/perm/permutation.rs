use std::fmt;
use std::ops::Mul;

use crate::error::{Error, Result};

/// A permutation of `{0, .., n-1}`, composed left to right: `(a * b)(x) = b(a(x))`.
///
/// Display and [`Permutation::from_cycles`] use 1-based cycle notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            match seen.get_mut(i as usize) {
                Some(s) if !*s => *s = true,
                _ => return Err(Error::invariant("image list is not a bijection")),
            }
        }
        Ok(Permutation { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<u32>) -> Self {
        debug_assert!(Permutation::from_images(images.clone()).is_ok());
        Permutation { images }
    }

    /// Builds a permutation of degree `degree` from 1-based cycles.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut used = vec![false; degree];
        for cycle in cycles {
            for (i, &x) in cycle.iter().enumerate() {
                if x == 0 || x > degree || std::mem::replace(&mut used[x - 1], true) {
                    return Err(Error::invariant(format!("bad point {x} in cycle list")));
                }
                let y = cycle[(i + 1) % cycle.len()];
                if y == 0 || y > degree {
                    return Err(Error::invariant(format!("bad point {y} in cycle list")));
                }
                images[x - 1] = (y - 1) as u32;
            }
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, x: u32) -> u32 {
        self.images[x as usize]
    }

    /// The point mapped onto `x`, found by walking the cycle through `x`.
    /// Cheap when cycles are short (e.g. in a semiregular group).
    pub fn preimage(&self, x: u32) -> u32 {
        let mut y = x;
        loop {
            let next = self.images[y as usize];
            if next == x {
                return y;
            }
            y = next;
        }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    pub fn smallest_moved_point(&self) -> Option<u32> {
        self.images
            .iter()
            .enumerate()
            .find(|&(i, &x)| i as u32 != x)
            .map(|(i, _)| i as u32)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u32; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    pub fn pow(&self, k: i64) -> Self {
        let mut base = if k < 0 { self.inverse() } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = Permutation::identity(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `by^-1 * self * by`.
    pub fn conjugate(&self, by: &Permutation) -> Self {
        let mut images = vec![0u32; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            images[by.images[i] as usize] = by.images[x as usize];
        }
        Permutation { images }
    }

    /// `self^-1 * other^-1 * self * other`.
    pub fn commutator(&self, other: &Permutation) -> Self {
        &self.inverse() * &self.conjugate(other)
    }

    /// Least common multiple of the cycle lengths.
    pub fn order(&self) -> u64 {
        let mut seen = vec![false; self.images.len()];
        let mut ord = 1u64;
        for start in 0..self.images.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0u64;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x] as usize;
                len += 1;
            }
            ord = lcm(ord, len);
        }
        ord
    }

    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.images.len()];
        let mut out = Vec::new();
        for start in 0..self.images.len() {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x as u32);
                x = self.images[x] as usize;
            }
            out.push(cycle);
        }
        out
    }
}

impl Mul for &Permutation {
    type Output = Permutation;

    fn mul(self, rhs: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), rhs.degree());
        Permutation {
            images: self.images.iter().map(|&x| rhs.images[x as usize]).collect(),
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            write!(f, "(")?;
            for (i, x) in c.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", x + 1)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn arb_perm(n: usize) -> impl Strategy<Value = Permutation> {
        Just((0..n as u32).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(|v| Permutation::from_images(v).unwrap())
    }

    #[test]
    fn four_cycle() {
        let c = Permutation::from_cycles(4, &[&[1, 2, 3, 4]]).unwrap();
        assert_eq!(c.order(), 4);
        assert_eq!(c.to_string(), "(1,2,3,4)");
        assert_eq!(
            c.pow(2),
            Permutation::from_cycles(4, &[&[1, 3], &[2, 4]]).unwrap()
        );
        assert_eq!(c.preimage(0), 3);
    }

    #[test]
    fn composition_is_left_to_right() {
        let a = Permutation::from_cycles(3, &[&[1, 2]]).unwrap();
        let b = Permutation::from_cycles(3, &[&[2, 3]]).unwrap();
        // 1 -a-> 2 -b-> 3
        assert_eq!((&a * &b).apply(0), 2);
    }

    proptest! {
        #[test]
        fn group_laws(a in arb_perm(7), b in arb_perm(7), c in arb_perm(7)) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert!((&a * &a.inverse()).is_identity());
            prop_assert_eq!(a.conjugate(&b), &(&b.inverse() * &a) * &b);
            prop_assert_eq!(a.commutator(&b), &(&(&a.inverse() * &b.inverse()) * &a) * &b);
            prop_assert!(a.pow(a.order() as i64).is_identity());
            for x in 0..7 {
                prop_assert_eq!(a.apply(a.preimage(x)), x);
            }
        }
    }
}
