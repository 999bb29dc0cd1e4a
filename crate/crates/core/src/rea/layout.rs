use alloc::vec::Vec;

use crate::scalars::{RatFunc, Ring};
use crate::{Error, Result};

/// Flattened layout of `A_{≤K} = ⊕_{m≤K} V_m ⊗ V_m*`.
///
/// Layer `m` occupies `(m+1)²` consecutive coordinates; inside a layer the
/// coordinate of `e_v ⊗ e_f*` is `v·(m+1) + f` (v-slot first).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Layout {
    k: usize,
    offsets: Vec<usize>,
}

impl Layout {
    pub fn new(k: usize) -> Self {
        let mut offsets = Vec::with_capacity(k + 2);
        let mut acc = 0;
        for m in 0..=k {
            offsets.push(acc);
            acc += (m + 1) * (m + 1);
        }
        offsets.push(acc);
        Layout { k, offsets }
    }

    pub fn max_layer(&self) -> usize {
        self.k
    }

    pub fn dim(&self) -> usize {
        self.offsets[self.k + 1]
    }

    pub fn layer_dim(m: usize) -> usize {
        (m + 1) * (m + 1)
    }

    pub fn offset(&self, m: usize) -> usize {
        self.offsets[m]
    }

    /// Flat index of `e_v ⊗ e_f*` in layer `m`.
    pub fn index(&self, m: usize, v: usize, f: usize) -> usize {
        self.offsets[m] + v * (m + 1) + f
    }

    /// `(layer, position inside the layer)` of a flat index.
    pub fn locate(&self, idx: usize) -> (usize, usize) {
        let m = self.offsets.partition_point(|&o| o <= idx) - 1;
        (m, idx - self.offsets[m])
    }

    pub fn layer_of(&self, idx: usize) -> usize {
        self.locate(idx).0
    }
}

/// Truncation bookkeeping: results in layers `≤ max_exact_layer` are exact.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Window {
    pub max_exact_layer: i64,
}

impl Window {
    pub fn full(k: usize) -> Self {
        Window {
            max_exact_layer: k as i64,
        }
    }

    /// Window after applying an operator of the given X-degree.
    pub fn shrink(self, x_degree: usize) -> Self {
        Window {
            max_exact_layer: self.max_exact_layer - x_degree as i64,
        }
    }

    pub fn require(self) -> Result<Self> {
        if self.max_exact_layer < 0 {
            Err(Error::WindowExhausted {
                window: self.max_exact_layer,
            })
        } else {
            Ok(self)
        }
    }
}

/// An element of `A_{≤K}` with its window.
#[derive(Clone, Debug, PartialEq)]
pub struct LayeredElement {
    pub layers: Vec<Vec<RatFunc>>,
    pub window: Window,
}

impl LayeredElement {
    pub fn zero(k: usize) -> Self {
        LayeredElement {
            layers: (0..=k)
                .map(|m| alloc::vec![RatFunc::zero(); Layout::layer_dim(m)])
                .collect(),
            window: Window::full(k),
        }
    }

    /// The unit `1 ∈ A_0`.
    pub fn unit(k: usize) -> Self {
        let mut e = LayeredElement::zero(k);
        e.layers[0][0] = RatFunc::one();
        e
    }

    pub fn max_layer(&self) -> usize {
        self.layers.len() - 1
    }

    pub fn from_flat(layout: &Layout, flat: &[RatFunc], window: Window) -> Result<Self> {
        if flat.len() != layout.dim() {
            return Err(Error::ShapeMismatch {
                op: "LayeredElement::from_flat",
                left: (layout.dim(), 1),
                right: (flat.len(), 1),
            });
        }
        let layers = (0..=layout.max_layer())
            .map(|m| flat[layout.offset(m)..layout.offset(m + 1)].to_vec())
            .collect();
        Ok(LayeredElement { layers, window })
    }

    pub fn to_flat(&self) -> Vec<RatFunc> {
        self.layers.iter().flatten().cloned().collect()
    }

    /// Layers that carry a nonzero coefficient.
    pub fn support(&self) -> Vec<usize> {
        (0..self.layers.len())
            .filter(|&m| self.layers[m].iter().any(|x| !x.is_zero()))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn layout_offsets() {
        let l = Layout::new(3);
        assert_eq!(l.dim(), 1 + 4 + 9 + 16);
        assert_eq!(l.offset(2), 5);
        assert_eq!(l.index(2, 1, 2), 5 + 3 + 2);
        assert_eq!(l.locate(5 + 3 + 2), (2, 5));
        assert_eq!(l.layer_of(0), 0);
        assert_eq!(l.layer_of(29), 3);
    }

    #[test]
    fn window_exhaustion() {
        let w = Window::full(2).shrink(2);
        assert!(w.require().is_ok());
        assert_eq!(w.shrink(1).require(), Err(Error::WindowExhausted { window: -1 }));
    }

    #[test]
    fn flat_roundtrip() {
        let l = Layout::new(2);
        let e = LayeredElement::unit(2);
        let back = LayeredElement::from_flat(&l, &e.to_flat(), e.window).unwrap();
        assert_eq!(back, e);
        assert_eq!(e.support(), alloc::vec![0]);
    }
}
