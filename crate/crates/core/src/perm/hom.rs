use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::group::PermGroup;
use super::subgroup::Builder;
use super::Permutation;
use crate::error::{Error, Result};

const PRODUCT_SPOT_CHECKS: usize = 32;
const KERNEL_SPOT_CHECKS: usize = 200;

/// A homomorphism between semiregular permutation groups, fixed by the
/// images of the source generators.
///
/// Construction evaluates the map on every source element along the
/// source's Schreier tree and checks every tree edge, which proves that
/// the generator images extend to a well-defined homomorphism.
#[derive(Clone, Debug)]
pub struct Homomorphism {
    source: PermGroup,
    target: PermGroup,
    images: Vec<Permutation>,
    /// Base-point image in the target of `f(u)`, for the `i`-th point `u`
    /// of the source orbit.
    table: Vec<u32>,
}

impl Homomorphism {
    pub fn new(source: PermGroup, target: PermGroup, images: Vec<Permutation>) -> Result<Self> {
        if !source.is_semiregular() || !target.is_semiregular() {
            return Err(Error::HypothesisUnmet(
                "homomorphisms are built between semiregular groups".into(),
            ));
        }
        if images.len() != source.generators().len() {
            return Err(Error::invariant(format!(
                "{} generator images for {} generators",
                images.len(),
                source.generators().len()
            )));
        }
        for (i, img) in images.iter().enumerate() {
            if img.degree() != target.degree() || !target.contains(img) {
                return Err(Error::invariant(format!(
                    "image of generator {i} is not in the target group"
                )));
            }
        }
        let orbit = source.free_orbit().expect("semiregular source");
        let mut table = vec![0u32; orbit.len()];
        for i in 1..orbit.len() {
            let (parent, label) = orbit.tree_edge(i).expect("non-root point");
            table[i] = images[label].apply(table[parent]);
        }
        for (i, &u) in orbit.points().iter().enumerate() {
            for (s, gen) in source.generators().iter().enumerate() {
                let j = orbit.index(gen.apply(u)).expect("orbit is closed");
                if images[s].apply(table[i]) != table[j] {
                    return Err(Error::invariant(format!(
                        "generator images do not define a homomorphism \
                         (relation through source point {u} and generator {s} fails)"
                    )));
                }
            }
        }
        let f = Homomorphism {
            source,
            target,
            images,
            table,
        };
        f.spot_check_products()?;
        Ok(f)
    }

    fn spot_check_products(&self) -> Result<()> {
        let points = self.source.free_orbit().expect("semiregular").points();
        let mut rng = ChaCha8Rng::seed_from_u64(points.len() as u64);
        let mut sa = self.source.arith();
        let mut ta = self.target.arith();
        for _ in 0..PRODUCT_SPOT_CHECKS {
            let u = points[rng.gen_range(0..points.len())];
            let v = points[rng.gen_range(0..points.len())];
            let lhs = self.image_point(sa.mul(u, v));
            let rhs = ta.mul(self.image_point(u), self.image_point(v));
            if lhs != rhs {
                return Err(Error::invariant(format!(
                    "image of a product differs from the product of images at ({u}, {v})"
                )));
            }
        }
        Ok(())
    }

    pub fn source(&self) -> &PermGroup {
        &self.source
    }

    pub fn target(&self) -> &PermGroup {
        &self.target
    }

    pub fn generator_images(&self) -> &[Permutation] {
        &self.images
    }

    /// Image of the source element named by base-point image `u`, as a
    /// target base-point image.
    pub(crate) fn image_point(&self, u: u32) -> u32 {
        let orbit = self.source.free_orbit().expect("semiregular");
        self.table[orbit.index(u).expect("point is not a source element")]
    }

    /// Image of a source element.
    pub fn apply(&self, x: &Permutation) -> Permutation {
        self.target.arith().perm(self.image_point(x.apply(0)))
    }

    pub fn image(&self) -> PermGroup {
        self.target.sibling(self.images.clone())
    }

    pub fn image_order(&self) -> u64 {
        let mut seen = vec![false; self.target.degree()];
        let mut count = 0u64;
        for &t in &self.table {
            if !std::mem::replace(&mut seen[t as usize], true) {
                count += 1;
            }
        }
        count
    }

    pub fn is_surjective(&self) -> bool {
        self.image_order() == self.target.order()
    }

    /// The kernel, read off from the evaluated map: every source element
    /// sent to the target base point lies in it.
    pub fn kernel(&self) -> PermGroup {
        let orbit = self.source.free_orbit().expect("semiregular");
        let ar = self.source.arith();
        let mut b = Builder::new(&self.source);
        for (i, &u) in orbit.points().iter().enumerate() {
            if self.table[i] == 0 && !b.has_point(u) {
                b.add(ar.perm(u));
            }
        }
        let k = b.finish();
        assert_eq!(
            k.order() * self.image_order(),
            self.source.order(),
            "kernel and image orders must multiply to the source order"
        );
        let ko = k.free_orbit().expect("semiregular kernel");
        let mut rng = ChaCha8Rng::seed_from_u64(orbit.len() as u64 ^ 0x6b65726e);
        for _ in 0..KERNEL_SPOT_CHECKS {
            let i = rng.gen_range(0..orbit.len());
            assert_eq!(
                ko.contains(orbit.points()[i]),
                self.table[i] == 0,
                "kernel membership must match trivial image"
            );
        }
        k
    }

    /// The restriction to a subgroup of the source.
    pub fn restrict(&self, sub: &PermGroup) -> Result<Homomorphism> {
        if !sub.is_subgroup_of(&self.source) {
            return Err(Error::invariant("restriction to a non-subgroup"));
        }
        let ta = self.target.arith();
        let images = sub
            .generators()
            .iter()
            .map(|h| ta.perm(self.image_point(h.apply(0))))
            .collect();
        let sub = self.source.sibling(sub.generators().to_vec());
        Homomorphism::new(sub, self.target.clone(), images)
    }

    /// Composition `other ∘ self`.
    pub fn then(&self, other: &Homomorphism) -> Result<Homomorphism> {
        let images = self.images.iter().map(|x| other.apply(x)).collect();
        Homomorphism::new(self.source.clone(), other.target.clone(), images)
    }
}

/// Kernel of a homomorphism.
pub fn hom_kernel(f: &Homomorphism) -> PermGroup {
    f.kernel()
}
