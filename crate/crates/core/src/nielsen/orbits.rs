use std::collections::HashSet;

use super::{GenVector, MarkedVector, Move};
use crate::classify::OrbitTag;
use crate::error::{Error, Result};
use crate::group::{automorphisms_with_cap, Automorphism, Elem, FiniteGroup, DEFAULT_ORDER_CAP};
use crate::sign::Sign;

/// Default cap on the number of packed states `|G|ⁿ·2ⁿ`.
pub const DEFAULT_STATE_CAP: u64 = 1 << 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    /// Nielsen moves only.
    Equivalence,
    /// Nielsen moves together with Aut(G) acting coordinatewise.
    Weak,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumConfig {
    pub state_cap: u64,
    /// Passed to the automorphism search in weak mode.
    pub order_cap: usize,
}

impl Default for EnumConfig {
    fn default() -> Self {
        EnumConfig { state_cap: DEFAULT_STATE_CAP, order_cap: DEFAULT_ORDER_CAP }
    }
}

/// Mixed-radix packing of `(g, v)` into one integer:
/// `((g_1·|G| + g_2)·|G| + … + g_n)·2ⁿ + bits(v)` with `v_1` the most
/// significant sign bit and `−1` as bit 1. Numeric order is therefore the
/// lexicographic order on (g-part, then v-part with + < −).
#[derive(Clone, Copy, Debug)]
struct StateSpace {
    order: u64,
    n: usize,
    signed: bool,
    g_count: u64,
    total: u64,
}

impl StateSpace {
    fn new(order: usize, n: usize, signed: bool, cap: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroLength);
        }
        let g_count = (order as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
        let total = if signed { g_count.saturating_mul(1u128 << n.min(100)) } else { g_count };
        if total > cap as u128 {
            return Err(Error::StateCap { states: total, cap });
        }
        Ok(StateSpace { order: order as u64, n, signed, g_count: g_count as u64, total: total as u64 })
    }

    #[inline]
    fn sign_bits(&self) -> usize {
        if self.signed {
            self.n
        } else {
            0
        }
    }

    #[inline]
    fn encode(&self, g: &[Elem], v: &[Sign]) -> u64 {
        let gcode = g.iter().fold(0u64, |acc, &x| acc * self.order + x as u64);
        if !self.signed {
            return gcode;
        }
        let vbits = v.iter().fold(0u64, |acc, &s| acc << 1 | s.is_minus() as u64);
        gcode << self.n | vbits
    }

    #[inline]
    fn decode(&self, code: u64, g: &mut [Elem], v: &mut [Sign]) {
        let mut gcode = code >> self.sign_bits();
        for k in (0..self.n).rev() {
            g[k] = (gcode % self.order) as Elem;
            gcode /= self.order;
        }
        for (k, slot) in v.iter_mut().enumerate().take(self.n) {
            *slot = if self.signed {
                Sign::from_bit(code >> (self.n - 1 - k) & 1 == 1)
            } else {
                Sign::Plus
            };
        }
    }

    #[inline]
    fn g_code(&self, code: u64) -> u64 {
        code >> self.sign_bits()
    }
}

/// One orbit: its canonical (least) representative and size, plus a tag set by
/// the classifier.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitRecord {
    pub representative: MarkedVector,
    pub size: usize,
    pub tag: Option<OrbitTag>,
}

/// The orbits of a move action on every marked generating n-vector.
#[derive(Clone, Debug)]
pub struct OrbitPartition {
    n: usize,
    mode: Mode,
    space: StateSpace,
    orbits: Vec<OrbitRecord>,
    membership: Vec<u32>,
}

const UNSEEN: u32 = u32::MAX;

impl OrbitPartition {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn orbits(&self) -> &[OrbitRecord] {
        &self.orbits
    }

    pub fn orbits_mut(&mut self) -> &mut [OrbitRecord] {
        &mut self.orbits
    }

    pub fn len(&self) -> usize {
        self.orbits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orbits.is_empty()
    }

    /// Whether the sign part is part of the state (false for Nielsen classes).
    pub fn is_signed(&self) -> bool {
        self.space.signed
    }

    /// Number of marked generating vectors covered by the partition.
    pub fn covered(&self) -> usize {
        self.orbits.iter().map(|o| o.size).sum()
    }

    /// Index of the orbit containing `x`, if `x` is a generating vector of the
    /// right length.
    pub fn orbit_index(&self, x: &MarkedVector) -> Option<usize> {
        if x.len() != self.n || (!self.space.signed && !x.v().is_all_plus()) {
            return None;
        }
        let code = self.space.encode(x.g(), x.v());
        match self.membership[code as usize] {
            UNSEEN => None,
            id => Some(id as usize),
        }
    }

    /// Members of orbit `index`, in canonical order.
    pub fn members(&self, index: usize) -> Vec<MarkedVector> {
        let mut g = vec![0; self.n];
        let mut v = vec![Sign::Plus; self.n];
        self.membership
            .iter()
            .enumerate()
            .filter(|(_, &id)| id as usize == index)
            .map(|(code, _)| {
                self.space.decode(code as u64, &mut g, &mut v);
                MarkedVector::from_parts(g.clone(), v.clone())
            })
            .collect()
    }
}

/// A single orbit computed by closure from one marked vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orbit {
    members: Vec<MarkedVector>,
}

impl Orbit {
    pub fn representative(&self) -> &MarkedVector {
        &self.members[0]
    }

    pub fn size(&self) -> usize {
        self.members.len()
    }

    pub fn members(&self) -> &[MarkedVector] {
        &self.members
    }

    pub fn contains(&self, x: &MarkedVector) -> bool {
        self.members.binary_search(x).is_ok()
    }
}

/// A Nielsen class of generating n-vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NielsenClass {
    pub representative: GenVector,
    pub size: usize,
}

/// Generators of Aut(G) sufficient for orbit closure.
fn automorphism_generators(group: &FiniteGroup, order_cap: usize) -> Result<Vec<Automorphism>> {
    let all = automorphisms_with_cap(group, order_cap)?;
    let mut gens: Vec<Automorphism> = Vec::new();
    let mut closure: HashSet<Automorphism> = HashSet::from([Automorphism::identity(group)]);
    for a in all {
        if closure.contains(&a) {
            continue;
        }
        gens.push(a);
        let mut frontier: Vec<Automorphism> = closure.iter().cloned().collect();
        while let Some(x) = frontier.pop() {
            for s in &gens {
                let y = s.compose(&x);
                if closure.insert(y.clone()) {
                    frontier.push(y);
                }
            }
        }
    }
    Ok(gens)
}

struct Engine<'a> {
    group: &'a FiniteGroup,
    space: StateSpace,
    moves: Vec<Move>,
    auts: Vec<Automorphism>,
}

impl<'a> Engine<'a> {
    fn new(group: &'a FiniteGroup, n: usize, mode: Mode, signed: bool, config: &EnumConfig) -> Result<Self> {
        let space = StateSpace::new(group.order(), n, signed, config.state_cap)?;
        let auts = match mode {
            Mode::Equivalence => Vec::new(),
            Mode::Weak => automorphism_generators(group, config.order_cap)?,
        };
        Ok(Engine { group, space, moves: Move::closure_set(n), auts })
    }

    /// Calls `visit` on every neighbour code of `code`.
    #[inline]
    fn neighbours(&self, code: u64, g: &mut [Elem], v: &mut [Sign], mut visit: impl FnMut(u64)) {
        let n = self.space.n;
        let mut g2 = [0 as Elem; 16];
        let mut v2 = [Sign::Plus; 16];
        self.space.decode(code, g, v);
        for m in &self.moves {
            g2[..n].copy_from_slice(g);
            v2[..n].copy_from_slice(v);
            m.apply_in_place(&mut g2[..n], |a| self.group.inv(a), |a, b| self.group.mul(a, b));
            if self.space.signed {
                m.apply_in_place(&mut v2[..n], |s| s, |a, b| a * b);
            }
            visit(self.space.encode(&g2[..n], &v2[..n]));
        }
        for a in &self.auts {
            for k in 0..n {
                g2[k] = a.apply(g[k]);
            }
            visit(self.space.encode(&g2[..n], v));
        }
    }

    fn partition(&self, mode: Mode) -> OrbitPartition {
        let n = self.space.n;
        let space = self.space;
        let mut g = vec![0; n];
        let mut v = vec![Sign::Plus; n];

        // generation is decided once per group part and shared by all 2ⁿ sign sectors
        let generating: Vec<bool> = (0..space.g_count)
            .map(|gcode| {
                space.decode(gcode << space.sign_bits(), &mut g, &mut v);
                self.group.generates(&g)
            })
            .collect();

        let mut membership = vec![UNSEEN; space.total as usize];
        let mut orbits = Vec::new();
        let mut stack = Vec::new();
        for seed in 0..space.total {
            if membership[seed as usize] != UNSEEN || !generating[space.g_code(seed) as usize] {
                continue;
            }
            let id = orbits.len() as u32;
            membership[seed as usize] = id;
            stack.push(seed);
            let mut size = 0usize;
            while let Some(code) = stack.pop() {
                size += 1;
                self.neighbours(code, &mut g, &mut v, |next| {
                    if membership[next as usize] == UNSEEN {
                        membership[next as usize] = id;
                        stack.push(next);
                    }
                });
            }
            space.decode(seed, &mut g, &mut v);
            orbits.push(OrbitRecord {
                representative: MarkedVector::from_parts(g.clone(), v.clone()),
                size,
                tag: None,
            });
        }
        OrbitPartition { n, mode, space, orbits, membership }
    }
}

/// Lengths beyond this never fit a useful state cap.
const MAX_LENGTH: usize = 16;

fn check_length(n: usize, cap: u64) -> Result<()> {
    if n == 0 {
        Err(Error::ZeroLength)
    } else if n > MAX_LENGTH {
        Err(Error::StateCap { states: 1u128 << MAX_LENGTH.min(n), cap })
    } else {
        Ok(())
    }
}

/// Partitions all marked generating n-vectors into orbits.
///
/// Seeds are scanned in increasing packed order, so each orbit's representative
/// is its lexicographically least member. Returns an empty partition when
/// n < μ(G).
pub fn enumerate_orbits(group: &FiniteGroup, n: usize, mode: Mode, config: &EnumConfig) -> Result<OrbitPartition> {
    check_length(n, config.state_cap)?;
    Ok(Engine::new(group, n, mode, true, config)?.partition(mode))
}

/// Nielsen classes of generating n-vectors (weak classes in [`Mode::Weak`]):
/// the move action restricted to the all-plus sign sector.
pub fn nielsen_classes(group: &FiniteGroup, n: usize, mode: Mode, config: &EnumConfig) -> Result<Vec<NielsenClass>> {
    check_length(n, config.state_cap)?;
    let partition = Engine::new(group, n, mode, false, config)?.partition(mode);
    Ok(partition
        .orbits
        .into_iter()
        .map(|o| NielsenClass { representative: o.representative.g().clone(), size: o.size })
        .collect())
}

/// The orbit of `x`, by breadth-first closure from `x` alone.
pub fn orbit_of(group: &FiniteGroup, x: &MarkedVector, mode: Mode, config: &EnumConfig) -> Result<Orbit> {
    let n = x.len();
    check_length(n, config.state_cap)?;
    // packing only; the orbit itself is bounded by the cap below
    let space = StateSpace::new(group.order(), n, true, u64::MAX)?;
    let auts = match mode {
        Mode::Equivalence => Vec::new(),
        Mode::Weak => automorphism_generators(group, config.order_cap)?,
    };
    let engine = Engine { group, space, moves: Move::closure_set(n), auts };
    let mut g = vec![0; n];
    let mut v = vec![Sign::Plus; n];
    let start = space.encode(x.g(), x.v());
    let mut seen = HashSet::from([start]);
    let mut queue = std::collections::VecDeque::from([start]);
    while let Some(code) = queue.pop_front() {
        let mut overflow = false;
        engine.neighbours(code, &mut g, &mut v, |next| {
            if seen.insert(next) {
                queue.push_back(next);
                overflow |= seen.len() as u64 > config.state_cap;
            }
        });
        if overflow {
            return Err(Error::StateCap { states: seen.len() as u128, cap: config.state_cap });
        }
    }
    let mut codes: Vec<u64> = seen.into_iter().collect();
    codes.sort_unstable();
    let members = codes
        .into_iter()
        .map(|c| {
            space.decode(c, &mut g, &mut v);
            MarkedVector::from_parts(g.clone(), v.clone())
        })
        .collect();
    Ok(Orbit { members })
}
