use super::Permutation;

pub(crate) const NONE: u32 = u32::MAX;

/// An orbit with its Schreier tree. Point `i` of the orbit is reached from
/// its parent by the generator `label[i]`.
#[derive(Clone, Debug)]
pub(crate) struct Orbit {
    points: Vec<u32>,
    pos: Vec<u32>,
    parent: Vec<u32>,
    label: Vec<u32>,
}

impl Orbit {
    pub(crate) fn new(degree: usize, base: u32) -> Self {
        let mut pos = vec![NONE; degree];
        pos[base as usize] = 0;
        Orbit {
            points: vec![base],
            pos,
            parent: vec![NONE],
            label: vec![NONE],
        }
    }

    pub(crate) fn build(degree: usize, base: u32, gens: &[Permutation]) -> Self {
        let mut o = Orbit::new(degree, base);
        o.extend(gens, 0);
        o
    }

    pub(crate) fn base(&self) -> u32 {
        self.points[0]
    }

    pub(crate) fn len(&self) -> usize {
        self.points.len()
    }

    pub(crate) fn points(&self) -> &[u32] {
        &self.points
    }

    #[inline]
    pub(crate) fn index(&self, point: u32) -> Option<usize> {
        match self.pos[point as usize] {
            NONE => None,
            i => Some(i as usize),
        }
    }

    #[inline]
    pub(crate) fn contains(&self, point: u32) -> bool {
        self.pos[point as usize] != NONE
    }

    /// Closes the orbit under `gens`, assuming it is already closed under
    /// `gens[..first_new]`.
    pub(crate) fn extend(&mut self, gens: &[Permutation], first_new: usize) {
        let old = self.points.len();
        for i in 0..old {
            for g in first_new..gens.len() {
                self.visit(i, g, gens);
            }
        }
        let mut i = old;
        while i < self.points.len() {
            for g in 0..gens.len() {
                self.visit(i, g, gens);
            }
            i += 1;
        }
    }

    #[inline]
    fn visit(&mut self, i: usize, g: usize, gens: &[Permutation]) {
        let q = gens[g].apply(self.points[i]);
        if self.pos[q as usize] == NONE {
            self.pos[q as usize] = self.points.len() as u32;
            self.points.push(q);
            self.parent.push(i as u32);
            self.label.push(g as u32);
        }
    }

    /// Parent index and generator label of a non-root orbit point.
    pub(crate) fn tree_edge(&self, i: usize) -> Option<(usize, usize)> {
        match self.parent[i] {
            NONE => None,
            p => Some((p as usize, self.label[i] as usize)),
        }
    }

    /// Generator labels from the base to orbit point `idx`, root first.
    pub(crate) fn path_into(&self, idx: usize, out: &mut Vec<u32>) {
        out.clear();
        let mut i = idx;
        while self.parent[i] != NONE {
            out.push(self.label[i]);
            i = self.parent[i] as usize;
        }
        out.reverse();
    }

    pub(crate) fn path(&self, idx: usize) -> Vec<u32> {
        let mut v = Vec::new();
        self.path_into(idx, &mut v);
        v
    }

    /// The transversal element carrying the base to orbit point `idx`.
    pub(crate) fn transversal(&self, gens: &[Permutation], idx: usize, degree: usize) -> Permutation {
        let mut t = Permutation::identity(degree);
        for l in self.path(idx) {
            t = &t * &gens[l as usize];
        }
        t
    }
}
