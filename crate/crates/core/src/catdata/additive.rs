//! Formal finite direct sums over a pivotal category.

use crate::catdata::pivotal::Pivotal;
use crate::exactla::{Field, Scalar};

/// The additive envelope: objects are lists of objects of `C` (the empty list is
/// the zero object), morphisms are block matrices.
pub struct Additive<'a, C: Pivotal> {
    pub base: &'a C,
}

/// `blocks[r][c] : src[c] → dst[r]`.
pub struct BlockMor<C: Pivotal> {
    pub src: Vec<C::Obj>,
    pub dst: Vec<C::Obj>,
    pub blocks: Vec<Vec<C::Mor>>,
}

impl<C: Pivotal> Clone for BlockMor<C> {
    fn clone(&self) -> Self {
        BlockMor {
            src: self.src.clone(),
            dst: self.dst.clone(),
            blocks: self.blocks.clone(),
        }
    }
}

impl<C: Pivotal> std::fmt::Debug for BlockMor<C> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("BlockMor")
            .field("src", &self.src)
            .field("dst", &self.dst)
            .field("blocks", &self.blocks)
            .finish()
    }
}

impl<'a, C: Pivotal> Additive<'a, C> {
    pub fn new(base: &'a C) -> Self {
        Additive { base }
    }

    pub fn single(&self, o: &C::Obj) -> Vec<C::Obj> {
        vec![o.clone()]
    }

    /// Inclusion of summand `k` of `sum`.
    pub fn inclusion(&self, sum: &[C::Obj], k: usize) -> BlockMor<C> {
        let src = vec![sum[k].clone()];
        self.build(&src, sum, |r, _| {
            if r == k {
                self.base.identity(&sum[k])
            } else {
                self.base.zero_mor(&sum[k], &sum[r])
            }
        })
    }

    /// Projection onto summand `k` of `sum`.
    pub fn projection(&self, sum: &[C::Obj], k: usize) -> BlockMor<C> {
        let dst = vec![sum[k].clone()];
        self.build(sum, &dst, |_, c| {
            if c == k {
                self.base.identity(&sum[k])
            } else {
                self.base.zero_mor(&sum[c], &sum[k])
            }
        })
    }

    /// Lifts a morphism of `C` to a 1×1 block morphism.
    pub fn lift(&self, f: &C::Mor) -> BlockMor<C> {
        BlockMor {
            src: vec![self.base.src(f)],
            dst: vec![self.base.dst(f)],
            blocks: vec![vec![f.clone()]],
        }
    }

    fn build(
        &self,
        src: &[C::Obj],
        dst: &[C::Obj],
        mut entry: impl FnMut(usize, usize) -> C::Mor,
    ) -> BlockMor<C> {
        let blocks = (0..dst.len())
            .map(|r| (0..src.len()).map(|c| entry(r, c)).collect())
            .collect();
        BlockMor {
            src: src.to_vec(),
            dst: dst.to_vec(),
            blocks,
        }
    }

    fn diagonal(
        &self,
        src: &[C::Obj],
        dst: &[C::Obj],
        mut diag: impl FnMut(usize) -> C::Mor,
    ) -> BlockMor<C> {
        self.build(src, dst, |r, c| {
            if r == c {
                diag(r)
            } else {
                self.base.zero_mor(&src[c], &dst[r])
            }
        })
    }
}

impl<C: Pivotal> Pivotal for Additive<'_, C> {
    type Obj = Vec<C::Obj>;
    type Mor = BlockMor<C>;

    fn field(&self) -> Field {
        self.base.field()
    }

    fn unit(&self) -> Vec<C::Obj> {
        vec![self.base.unit()]
    }

    fn tensor_obj(&self, a: &Vec<C::Obj>, b: &Vec<C::Obj>) -> Vec<C::Obj> {
        a.iter()
            .flat_map(|x| b.iter().map(move |y| self.base.tensor_obj(x, y)))
            .collect()
    }

    fn dual_obj(&self, a: &Vec<C::Obj>) -> Vec<C::Obj> {
        a.iter().map(|x| self.base.dual_obj(x)).collect()
    }

    fn obj_name(&self, a: &Vec<C::Obj>) -> String {
        match a.len() {
            0 => "0".into(),
            1 => self.base.obj_name(&a[0]),
            _ => a
                .iter()
                .map(|x| self.base.obj_name(x))
                .collect::<Vec<_>>()
                .join("⊕"),
        }
    }

    fn src(&self, f: &BlockMor<C>) -> Vec<C::Obj> {
        f.src.clone()
    }

    fn dst(&self, f: &BlockMor<C>) -> Vec<C::Obj> {
        f.dst.clone()
    }

    fn hom_dim(&self, a: &Vec<C::Obj>, b: &Vec<C::Obj>) -> usize {
        b.iter()
            .map(|y| a.iter().map(|x| self.base.hom_dim(x, y)).sum::<usize>())
            .sum()
    }

    fn hom_basis(&self, a: &Vec<C::Obj>, b: &Vec<C::Obj>) -> Vec<BlockMor<C>> {
        let mut out = Vec::new();
        for r in 0..b.len() {
            for c in 0..a.len() {
                for e in self.base.hom_basis(&a[c], &b[r]) {
                    out.push(self.build(a, b, |rr, cc| {
                        if (rr, cc) == (r, c) {
                            e.clone()
                        } else {
                            self.base.zero_mor(&a[cc], &b[rr])
                        }
                    }));
                }
            }
        }
        out
    }

    fn coords(&self, f: &BlockMor<C>) -> Vec<Scalar> {
        f.blocks
            .iter()
            .flatten()
            .flat_map(|m| self.base.coords(m))
            .collect()
    }

    fn from_coords(&self, a: &Vec<C::Obj>, b: &Vec<C::Obj>, v: &[Scalar]) -> BlockMor<C> {
        let mut off = 0;
        let out = self.build(a, b, |r, c| {
            let n = self.base.hom_dim(&a[c], &b[r]);
            let m = self.base.from_coords(&a[c], &b[r], &v[off..off + n]);
            off += n;
            m
        });
        assert_eq!(off, v.len(), "coefficient length");
        out
    }

    fn embed(&self, f: &BlockMor<C>) -> Vec<Scalar> {
        f.blocks
            .iter()
            .flatten()
            .flat_map(|m| self.base.embed(m))
            .collect()
    }

    fn identity(&self, a: &Vec<C::Obj>) -> BlockMor<C> {
        self.diagonal(a, a, |i| self.base.identity(&a[i]))
    }

    fn compose(&self, g: &BlockMor<C>, f: &BlockMor<C>) -> BlockMor<C> {
        assert_eq!(f.dst, g.src, "composing non-composable morphisms");
        let b = self.base;
        self.build(&f.src, &g.dst, |r, c| {
            let terms: Vec<C::Mor> = (0..f.dst.len())
                .map(|k| b.compose(&g.blocks[r][k], &f.blocks[k][c]))
                .collect();
            let one = b.field().one();
            let refs: Vec<(Scalar, &C::Mor)> = terms.iter().map(|t| (one.clone(), t)).collect();
            b.lin(&f.src[c], &g.dst[r], &refs)
        })
    }

    fn tensor_mor(&self, f: &BlockMor<C>, g: &BlockMor<C>) -> BlockMor<C> {
        let src = self.tensor_obj(&f.src, &g.src);
        let dst = self.tensor_obj(&f.dst, &g.dst);
        let (gs, gd) = (g.src.len(), g.dst.len());
        self.build(&src, &dst, |r, c| {
            self.base
                .tensor_mor(&f.blocks[r / gd][c / gs], &g.blocks[r % gd][c % gs])
        })
    }

    fn lin(
        &self,
        a: &Vec<C::Obj>,
        b: &Vec<C::Obj>,
        terms: &[(Scalar, &BlockMor<C>)],
    ) -> BlockMor<C> {
        self.build(a, b, |r, c| {
            let t: Vec<(Scalar, &C::Mor)> = terms
                .iter()
                .map(|(x, m)| (x.clone(), &m.blocks[r][c]))
                .collect();
            self.base.lin(&a[c], &b[r], &t)
        })
    }

    fn ev(&self, a: &Vec<C::Obj>) -> BlockMor<C> {
        let src = self.tensor_obj(&self.dual_obj(a), a);
        let n = a.len();
        let u = self.unit();
        self.build(&src, &u, |_, c| {
            if c / n == c % n {
                self.base.ev(&a[c % n])
            } else {
                self.base.zero_mor(&src[c], &u[0])
            }
        })
    }

    fn coev(&self, a: &Vec<C::Obj>) -> BlockMor<C> {
        let dst = self.tensor_obj(a, &self.dual_obj(a));
        let n = a.len();
        let u = self.unit();
        self.build(&u, &dst, |r, _| {
            if r / n == r % n {
                self.base.coev(&a[r % n])
            } else {
                self.base.zero_mor(&u[0], &dst[r])
            }
        })
    }

    fn ev_tilde(&self, a: &Vec<C::Obj>) -> BlockMor<C> {
        let src = self.tensor_obj(a, &self.dual_obj(a));
        let n = a.len();
        let u = self.unit();
        self.build(&src, &u, |_, c| {
            if c / n == c % n {
                self.base.ev_tilde(&a[c % n])
            } else {
                self.base.zero_mor(&src[c], &u[0])
            }
        })
    }

    fn coev_tilde(&self, a: &Vec<C::Obj>) -> BlockMor<C> {
        let dst = self.tensor_obj(&self.dual_obj(a), a);
        let n = a.len();
        let u = self.unit();
        self.build(&u, &dst, |r, _| {
            if r / n == r % n {
                self.base.coev_tilde(&a[r % n])
            } else {
                self.base.zero_mor(&u[0], &dst[r])
            }
        })
    }

    fn strict_dual_of_tensor(&self, a: &Vec<C::Obj>, b: &Vec<C::Obj>) -> bool {
        (a.len() <= 1 || b.len() <= 1)
            && a.iter()
                .all(|x| b.iter().all(|y| self.base.strict_dual_of_tensor(x, y)))
    }

    fn is_morphism(&self, f: &BlockMor<C>) -> bool {
        f.blocks.iter().flatten().all(|m| self.base.is_morphism(m))
    }
}
