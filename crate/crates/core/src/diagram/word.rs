use serde::{Deserialize, Serialize};

use crate::catdata::Pivotal;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Orientation {
    Up,
    Down,
}

/// A strand coloured by `object`; a downward strand contributes `object*`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct StrandType<O> {
    pub object: O,
    pub orientation: Orientation,
}

impl<O> StrandType<O> {
    pub fn up(object: O) -> Self {
        StrandType {
            object,
            orientation: Orientation::Up,
        }
    }

    pub fn down(object: O) -> Self {
        StrandType {
            object,
            orientation: Orientation::Down,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CupFlavor {
    /// `ev_X : X*⊗X → 1`, closing a (down, up) pair.
    Ev,
    /// `ẽv_X : X⊗X* → 1`, closing an (up, down) pair.
    EvTilde,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CapFlavor {
    /// `coev_X : 1 → X⊗X*`, opening an (up, down) pair.
    Coev,
    /// `c̃oev_X : 1 → X*⊗X`, opening a (down, up) pair.
    CoevTilde,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Cell<O, M> {
    Identity(StrandType<O>),
    Box {
        src: Vec<StrandType<O>>,
        dst: Vec<StrandType<O>>,
        mor: M,
    },
    Cup {
        object: O,
        flavor: CupFlavor,
    },
    Cap {
        object: O,
        flavor: CapFlavor,
    },
}

impl<O: Clone, M> Cell<O, M> {
    pub fn inputs(&self) -> Vec<StrandType<O>> {
        match self {
            Cell::Identity(s) => vec![s.clone()],
            Cell::Box { src, .. } => src.clone(),
            Cell::Cup { object, flavor } => pair(object, *flavor == CupFlavor::Ev),
            Cell::Cap { .. } => Vec::new(),
        }
    }

    pub fn outputs(&self) -> Vec<StrandType<O>> {
        match self {
            Cell::Identity(s) => vec![s.clone()],
            Cell::Box { dst, .. } => dst.clone(),
            Cell::Cup { .. } => Vec::new(),
            Cell::Cap { object, flavor } => pair(object, *flavor == CapFlavor::CoevTilde),
        }
    }
}

fn pair<O: Clone>(o: &O, down_first: bool) -> Vec<StrandType<O>> {
    if down_first {
        vec![StrandType::down(o.clone()), StrandType::up(o.clone())]
    } else {
        vec![StrandType::up(o.clone()), StrandType::down(o.clone())]
    }
}

/// A planar diagram read bottom to top: each layer is a horizontal row of cells.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DiagramWord<O, M> {
    pub source: Vec<StrandType<O>>,
    pub target: Vec<StrandType<O>>,
    pub layers: Vec<Vec<Cell<O, M>>>,
}

pub type Word<C> = DiagramWord<<C as Pivotal>::Obj, <C as Pivotal>::Mor>;

impl<O: Clone + PartialEq, M: Clone> DiagramWord<O, M> {
    pub fn identity(strands: Vec<StrandType<O>>) -> Self {
        DiagramWord {
            source: strands.clone(),
            target: strands,
            layers: Vec::new(),
        }
    }

    /// `self` stacked on top of `below`.
    pub fn stack_on(&self, below: &Self) -> Result<Self> {
        if below.target != self.source {
            return Err(Error::Chain("stacked words do not chain".into()));
        }
        let mut layers = below.layers.clone();
        layers.extend(self.layers.iter().cloned());
        Ok(DiagramWord {
            source: below.source.clone(),
            target: self.target.clone(),
            layers,
        })
    }

    /// Horizontal juxtaposition, padding the shorter word with identity layers.
    pub fn beside(&self, right: &Self) -> Self {
        let depth = self.layers.len().max(right.layers.len());
        let pad = |w: &Self, k: usize| -> Vec<Cell<O, M>> {
            match w.layers.get(k) {
                Some(l) => l.clone(),
                None => w.target.iter().cloned().map(Cell::Identity).collect(),
            }
        };
        let layers = (0..depth)
            .map(|k| {
                let mut l = pad(self, k);
                l.extend(pad(right, k));
                l
            })
            .collect();
        let mut source = self.source.clone();
        source.extend(right.source.iter().cloned());
        let mut target = self.target.clone();
        target.extend(right.target.iter().cloned());
        DiagramWord {
            source,
            target,
            layers,
        }
    }
}

/// `⊗`-collapse of a strand sequence.
pub fn collapse<C: Pivotal>(c: &C, strands: &[StrandType<C::Obj>]) -> C::Obj {
    strands.iter().fold(c.unit(), |acc, s| {
        let o = match s.orientation {
            Orientation::Up => s.object.clone(),
            Orientation::Down => c.dual_obj(&s.object),
        };
        c.tensor_obj(&acc, &o)
    })
}

fn cell_morphism<C: Pivotal>(c: &C, cell: &Cell<C::Obj, C::Mor>) -> Result<C::Mor> {
    Ok(match cell {
        Cell::Identity(s) => c.identity(&collapse(c, std::slice::from_ref(s))),
        Cell::Box { src, dst, mor } => {
            let (s, d) = (collapse(c, src), collapse(c, dst));
            if c.src(mor) != s || c.dst(mor) != d {
                return Err(Error::BoxMismatch(format!(
                    "box morphism {} → {} does not match strands {} → {}",
                    c.obj_name(&c.src(mor)),
                    c.obj_name(&c.dst(mor)),
                    c.obj_name(&s),
                    c.obj_name(&d)
                )));
            }
            mor.clone()
        }
        Cell::Cup { object, flavor } => match flavor {
            CupFlavor::Ev => c.ev(object),
            CupFlavor::EvTilde => c.ev_tilde(object),
        },
        Cell::Cap { object, flavor } => match flavor {
            CapFlavor::Coev => c.coev(object),
            CapFlavor::CoevTilde => c.coev_tilde(object),
        },
    })
}

/// Evaluates a word: tensor within layers, compose across layers.
pub fn evaluate<C: Pivotal>(c: &C, w: &Word<C>) -> Result<C::Mor> {
    let mut current = w.source.clone();
    let mut acc = c.identity(&collapse(c, &w.source));
    for (k, layer) in w.layers.iter().enumerate() {
        let inputs: Vec<StrandType<C::Obj>> = layer.iter().flat_map(|cell| cell.inputs()).collect();
        if inputs != current {
            return Err(Error::Chain(format!(
                "layer {k} does not accept the strands below it"
            )));
        }
        let mors = layer
            .iter()
            .map(|cell| cell_morphism(c, cell))
            .collect::<Result<Vec<_>>>()?;
        let m = c.tensor_mor_all(&mors);
        acc = c.compose(&m, &acc);
        current = layer.iter().flat_map(|cell| cell.outputs()).collect();
    }
    if current != w.target {
        return Err(Error::Chain(
            "top layer does not produce the target strands".into(),
        ));
    }
    Ok(acc)
}
