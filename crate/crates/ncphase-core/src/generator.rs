//! The 18 canonical generators and their commutation table.
//!
//! Six families of three axes each: the physical pair `(x, p)` and two
//! auxiliary oscillator pairs `(a, p^a)` and `(b, p^b)`. The only nonzero
//! commutators among generators are the conjugate pairs,
//! `[x_i, p_j] = [a_i, p^a_j] = [b_i, p^b_j] = iℏ δ_ij`.

use core::fmt;

/// Generator family. The derived `Ord` fixes the canonical normal-ordering
/// convention: all coordinates before all momenta,
/// `x < a < b < p < p^a < p^b`, each family ordered by axis.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum GeneratorKind {
    /// Physical coordinate `x_i`.
    Coord,
    /// Auxiliary coordinate `a_i`.
    AuxCoordA,
    /// Auxiliary coordinate `b_i`.
    AuxCoordB,
    /// Physical momentum `p_i`.
    Momentum,
    /// Auxiliary momentum `p^a_i`.
    AuxMomentumA,
    /// Auxiliary momentum `p^b_i`.
    AuxMomentumB,
}

impl GeneratorKind {
    pub const ALL: [GeneratorKind; 6] = [
        GeneratorKind::Coord,
        GeneratorKind::AuxCoordA,
        GeneratorKind::AuxCoordB,
        GeneratorKind::Momentum,
        GeneratorKind::AuxMomentumA,
        GeneratorKind::AuxMomentumB,
    ];

    fn prefix(self) -> &'static str {
        match self {
            GeneratorKind::Coord => "x",
            GeneratorKind::AuxCoordA => "a",
            GeneratorKind::AuxCoordB => "b",
            GeneratorKind::Momentum => "p",
            GeneratorKind::AuxMomentumA => "pa",
            GeneratorKind::AuxMomentumB => "pb",
        }
    }

    /// The conjugate momentum of a coordinate family (and vice versa).
    pub fn conjugate(self) -> GeneratorKind {
        match self {
            GeneratorKind::Coord => GeneratorKind::Momentum,
            GeneratorKind::AuxCoordA => GeneratorKind::AuxMomentumA,
            GeneratorKind::AuxCoordB => GeneratorKind::AuxMomentumB,
            GeneratorKind::Momentum => GeneratorKind::Coord,
            GeneratorKind::AuxMomentumA => GeneratorKind::AuxCoordA,
            GeneratorKind::AuxMomentumB => GeneratorKind::AuxCoordB,
        }
    }

    pub fn is_coordinate(self) -> bool {
        matches!(
            self,
            GeneratorKind::Coord | GeneratorKind::AuxCoordA | GeneratorKind::AuxCoordB
        )
    }
}

/// One of the 18 generators: a family plus an axis in `{1, 2, 3}`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct GeneratorId {
    kind: GeneratorKind,
    axis: u8,
}

impl GeneratorId {
    pub fn new(kind: GeneratorKind, axis: u8) -> Self {
        assert!((1..=3).contains(&axis), "generator axis must be 1, 2 or 3");
        GeneratorId { kind, axis }
    }

    pub fn kind(self) -> GeneratorKind {
        self.kind
    }

    pub fn axis(self) -> u8 {
        self.axis
    }

    /// Position in the canonical total order, `0..18`.
    pub fn index(self) -> usize {
        let k = match self.kind {
            GeneratorKind::Coord => 0,
            GeneratorKind::AuxCoordA => 1,
            GeneratorKind::AuxCoordB => 2,
            GeneratorKind::Momentum => 3,
            GeneratorKind::AuxMomentumA => 4,
            GeneratorKind::AuxMomentumB => 5,
        };
        k * 3 + (self.axis as usize - 1)
    }

    pub fn all() -> impl Iterator<Item = GeneratorId> {
        GeneratorKind::ALL
            .into_iter()
            .flat_map(|kind| (1..=3).map(move |axis| GeneratorId { kind, axis }))
    }

    /// Sign `s` in `[g, h] = s·iℏ`: `+1` for a coordinate against its own
    /// conjugate momentum, `-1` for the reverse order, `0` for every other
    /// pair.
    pub fn ccr_sign(self, other: GeneratorId) -> i64 {
        if self.axis != other.axis || self.kind.conjugate() != other.kind {
            0
        } else if self.kind.is_coordinate() {
            1
        } else {
            -1
        }
    }
}

impl fmt::Display for GeneratorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.kind.prefix(), self.axis)
    }
}

/// Shorthand constructors; `x(1)` is `x_1`, `pa(3)` is `p^a_3`, etc.
pub fn x(axis: u8) -> GeneratorId {
    GeneratorId::new(GeneratorKind::Coord, axis)
}

pub fn a(axis: u8) -> GeneratorId {
    GeneratorId::new(GeneratorKind::AuxCoordA, axis)
}

pub fn b(axis: u8) -> GeneratorId {
    GeneratorId::new(GeneratorKind::AuxCoordB, axis)
}

pub fn p(axis: u8) -> GeneratorId {
    GeneratorId::new(GeneratorKind::Momentum, axis)
}

pub fn pa(axis: u8) -> GeneratorId {
    GeneratorId::new(GeneratorKind::AuxMomentumA, axis)
}

pub fn pb(axis: u8) -> GeneratorId {
    GeneratorId::new(GeneratorKind::AuxMomentumB, axis)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;

    #[test]
    fn eighteen_distinct_generators_in_canonical_order() {
        let all: Vec<GeneratorId> = GeneratorId::all().collect();
        assert_eq!(all.len(), 18);
        for (i, g) in all.iter().enumerate() {
            assert_eq!(g.index(), i);
        }
        for w in all.windows(2) {
            assert!(w[0] < w[1], "order must be strictly increasing");
        }
        // coordinates first, momenta last
        assert_eq!(all[0], x(1));
        assert_eq!(all[8], b(3));
        assert_eq!(all[9], p(1));
        assert_eq!(all[17], pb(3));
    }

    #[test]
    fn ccr_table() {
        assert_eq!(x(1).ccr_sign(p(1)), 1);
        assert_eq!(p(1).ccr_sign(x(1)), -1);
        assert_eq!(a(2).ccr_sign(pa(2)), 1);
        assert_eq!(b(3).ccr_sign(pb(3)), 1);
        // different axes or non-conjugate families commute
        assert_eq!(x(1).ccr_sign(p(2)), 0);
        assert_eq!(x(1).ccr_sign(pa(1)), 0);
        assert_eq!(a(1).ccr_sign(pb(1)), 0);
        assert_eq!(a(1).ccr_sign(b(1)), 0);
        assert_eq!(p(2).ccr_sign(pb(2)), 0);
    }
}
