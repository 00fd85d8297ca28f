use crate::error::{ensure_invariant, Result};

use super::element::{enumerate_group, Group, GroupElement};

/// Conjugacy classes of `G`, ordered by the index of their smallest member.
///
/// Class 0 is always `{1}`. Representatives are the minimal-index members.
#[derive(Clone, Debug)]
pub struct ClassTable {
    group: Group,
    reps: Vec<usize>,
    sizes: Vec<usize>,
    class_of: Vec<usize>,
    square: Vec<usize>,
}

impl ClassTable {
    /// Orbit closure under conjugation by the generators of `G`, then the
    /// square map, checked on every element.
    pub fn new(group: Group) -> Result<Self> {
        let n = group.order();
        let gens = group.generators();
        let mut class_of = vec![usize::MAX; n];
        let mut reps = Vec::new();
        let mut sizes = Vec::new();
        let mut stack = Vec::new();
        for start in 0..n {
            if class_of[start] != usize::MAX {
                continue;
            }
            let k = reps.len();
            reps.push(start);
            class_of[start] = k;
            stack.push(start);
            let mut size = 0;
            while let Some(i) = stack.pop() {
                size += 1;
                let h = group.element(i);
                for g in &gens {
                    let j = group.index_of(&g.conjugate(&h));
                    if class_of[j] == usize::MAX {
                        class_of[j] = k;
                        stack.push(j);
                    }
                }
            }
            sizes.push(size);
        }

        ensure_invariant!(reps[0] == 0 && sizes[0] == 1, "class 0 is not {{1}}");
        ensure_invariant!(
            sizes.iter().sum::<usize>() == n,
            "class sizes do not sum to |G|"
        );
        for &s in &sizes {
            ensure_invariant!(
                n.is_multiple_of(s),
                "class size {s} does not divide |G| = {n}"
            );
        }

        let mut square = vec![usize::MAX; reps.len()];
        for (i, g) in group.elements().iter().enumerate() {
            let sq = class_of[group.index_of(&g.square())];
            let k = class_of[i];
            if square[k] == usize::MAX {
                square[k] = sq;
            }
            ensure_invariant!(
                square[k] == sq,
                "square map depends on the representative of class {k}"
            );
        }

        Ok(ClassTable {
            group,
            reps,
            sizes,
            class_of,
            square,
        })
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn prime(&self) -> u32 {
        self.group.prime()
    }

    pub fn group_order(&self) -> usize {
        self.group.order()
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn size(&self, class: usize) -> usize {
        self.sizes[class]
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    /// `|C_G(g)| = |G| / |class|`.
    pub fn centralizer_order(&self, class: usize) -> usize {
        self.group.order() / self.sizes[class]
    }

    pub fn rep_index(&self, class: usize) -> usize {
        self.reps[class]
    }

    pub fn rep(&self, class: usize) -> GroupElement {
        self.group.element(self.reps[class])
    }

    pub fn class_of_index(&self, index: usize) -> usize {
        self.class_of[index]
    }

    pub fn class_of(&self, g: &GroupElement) -> usize {
        self.class_of[self.group.index_of(g)]
    }

    /// Class of `g^2` for `g` in `class`.
    pub fn square_class(&self, class: usize) -> usize {
        self.square[class]
    }

    /// Whether the class lies inside `V`.
    pub fn in_v(&self, class: usize) -> bool {
        self.rep(class).in_v()
    }

    /// Q8 class of the image of `class` under `G -> G/V ≅ Q`.
    pub fn q8_class(&self, class: usize) -> usize {
        self.group
            .quaternion()
            .class_of(&self.rep(class).m())
            .expect("representatives lie in V ⋊ Q")
    }

    /// Members of a class, by element index.
    pub fn members(&self, class: usize) -> impl Iterator<Item = usize> + '_ {
        self.class_of
            .iter()
            .enumerate()
            .filter(move |(_, &k)| k == class)
            .map(|(i, _)| i)
    }
}

/// Conjugacy classes of `(C_p x C_p) ⋊ Q` for the canonical subgroup `Q`.
pub fn conjugacy_classes(p: u32) -> Result<ClassTable> {
    ClassTable::new(enumerate_group(p)?)
}

/// The square map as a class-indexed vector.
pub fn square_map(ct: &ClassTable) -> Vec<usize> {
    ct.square.clone()
}

/// `#{g ∈ G : g^2 = 1}`, counted element by element.
pub fn count_square_roots_of_identity(ct: &ClassTable) -> usize {
    ct.group()
        .elements()
        .iter()
        .filter(|g| g.square().is_identity())
        .count()
}
