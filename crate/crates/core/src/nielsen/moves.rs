use std::fmt;

use crate::error::{Error, Result};

/// Which side a slide multiplies on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

/// A Nielsen move on n-tuples, acting on the group part and the sign part of a
/// marked vector by the same substitution of basis words.
///
/// Coordinates are 0-based. `Invert`, `Twist`, `Swap` and `Shift` are the four
/// classical generators placed at arbitrary coordinates; `Slide` is the basic
/// move `x_target ↦ x_target·x_by^{±1}` (or on the left).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Move {
    /// `x_i ↦ x_i⁻¹`
    Invert(usize),
    /// `x_i ↦ x_i⁻¹`, `x_j ↦ x_i·x_j`
    Twist { i: usize, j: usize },
    Slide { target: usize, by: usize, side: Side, inverse: bool },
    /// `x_i ↔ x_j`
    Swap(usize, usize),
    /// `(x_1, …, x_n) ↦ (x_n, x_1, …, x_{n−1})`
    Shift,
}

impl Move {
    pub fn validate(&self, n: usize) -> Result<()> {
        let bad = || Err(Error::InvalidMove(self.to_string(), n));
        if n == 0 {
            return Err(Error::ZeroLength);
        }
        match *self {
            Move::Invert(i) if i < n => Ok(()),
            Move::Twist { i, j } | Move::Swap(i, j) | Move::Slide { target: i, by: j, .. }
                if i < n && j < n && i != j =>
            {
                Ok(())
            }
            Move::Shift if n >= 2 => Ok(()),
            _ => bad(),
        }
    }

    /// Applies the move in place. `inv` and `mul` are the operations of the
    /// target group; for the sign part `inv` is the identity.
    #[inline]
    pub fn apply_in_place<T: Copy>(&self, xs: &mut [T], inv: impl Fn(T) -> T, mul: impl Fn(T, T) -> T) {
        match *self {
            Move::Invert(i) => xs[i] = inv(xs[i]),
            Move::Twist { i, j } => {
                let gi = xs[i];
                xs[i] = inv(gi);
                xs[j] = mul(gi, xs[j]);
            }
            Move::Slide { target, by, side, inverse } => {
                let other = if inverse { inv(xs[by]) } else { xs[by] };
                xs[target] = match side {
                    Side::Right => mul(xs[target], other),
                    Side::Left => mul(other, xs[target]),
                };
            }
            Move::Swap(i, j) => xs.swap(i, j),
            Move::Shift => xs.rotate_right(1),
        }
    }

    /// The move set used for orbit closure on n-tuples: every inversion, every
    /// slide, every transposition and the cyclic shift. For n = 1 only the
    /// inversion remains.
    pub fn closure_set(n: usize) -> Vec<Move> {
        let mut moves: Vec<Move> = (0..n).map(Move::Invert).collect();
        if n < 2 {
            return moves;
        }
        for target in 0..n {
            for by in 0..n {
                if target == by {
                    continue;
                }
                for side in [Side::Right, Side::Left] {
                    for inverse in [false, true] {
                        moves.push(Move::Slide { target, by, side, inverse });
                    }
                }
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                moves.push(Move::Swap(i, j));
            }
        }
        moves.push(Move::Shift);
        moves
    }

    /// Every move with valid parameters for length n, including twists.
    pub fn all(n: usize) -> Vec<Move> {
        let mut moves = Move::closure_set(n);
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    moves.push(Move::Twist { i, j });
                }
            }
        }
        moves
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Move::Invert(i) => write!(f, "t{}", i + 1),
            Move::Twist { i, j } => write!(f, "u({},{})", i + 1, j + 1),
            Move::Slide { target, by, side, inverse } => {
                let exp = if inverse { "^-1" } else { "" };
                match side {
                    Side::Right => write!(f, "x{t}->x{t}x{b}{exp}", t = target + 1, b = by + 1),
                    Side::Left => write!(f, "x{t}->x{b}{exp}x{t}", t = target + 1, b = by + 1),
                }
            }
            Move::Swap(i, j) => write!(f, "v({},{})", i + 1, j + 1),
            Move::Shift => f.write_str("w"),
        }
    }
}
