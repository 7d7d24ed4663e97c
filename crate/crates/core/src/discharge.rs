//! The two discharging procedures replayed as exact ledgers.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use crate::density::Rational;
use crate::graph::{is_big, Graph, VertexId};
use crate::lightforest::{build_lhat, build_light_forest, small_components, LHat, LightForest, LightForestError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Theorem {
    /// `d >= 2/(3 − M) − 2`.
    T1,
    /// `8/3 <= M < 3` and `d >= 1/(3 − M)`.
    T2,
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Theorem::T1 => "1",
            Theorem::T2 => "2",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParamsError {
    #[error("InvalidParams: {0}")]
    InvalidParams(&'static str),
}

/// Validated `(M, d)` pair for one of the two theorems; `epsilon = 3 − M`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveParams {
    pub m: Rational,
    pub d: usize,
    pub epsilon: Rational,
    pub theorem: Theorem,
}

impl SolveParams {
    pub fn new(m: Rational, d: usize, theorem: Theorem) -> Result<Self, ParamsError> {
        let three = Rational::from(3i64);
        if m >= three {
            return Err(ParamsError::InvalidParams("M must be below 3"));
        }
        let epsilon = &three - &m;
        let dr = Rational::from(d);
        match theorem {
            Theorem::T1 => {
                let need = Rational::from(2i64) / epsilon.clone() - Rational::from(2i64);
                if dr < need {
                    return Err(ParamsError::InvalidParams("d is below 2/(3-M) - 2"));
                }
            }
            Theorem::T2 => {
                if m < Rational::new(8, 3) {
                    return Err(ParamsError::InvalidParams("M must be at least 8/3"));
                }
                if dr < Rational::one() / epsilon.clone() {
                    return Err(ParamsError::InvalidParams("d is below 1/(3-M)"));
                }
            }
        }
        Ok(SolveParams {
            m,
            d,
            epsilon,
            theorem,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Account {
    Vertex(VertexId),
    /// Index into [`ChargeLedger::pools`].
    Pool(usize),
    Pot,
}

impl fmt::Display for Account {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Account::Vertex(v) => write!(f, "v{v}"),
            Account::Pool(i) => write!(f, "pool{i}"),
            Account::Pot => f.write_str("pot"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transfer {
    pub from: Account,
    pub to: Account,
    pub amount: Rational,
}

/// A maximal small 3⁺ component paying and receiving as one account. Its
/// members' own charges are untouched; `delta` is the net flow through the
/// pool.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pool {
    pub vertices: Vec<VertexId>,
    pub delta: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChargeLedger {
    pub initial: Vec<Rational>,
    pub final_charge: Vec<Rational>,
    pub pools: Vec<Pool>,
    pub pot: Rational,
    pub transfers: Vec<Transfer>,
}

impl ChargeLedger {
    fn start(g: &Graph, m: &Rational) -> Self {
        let initial: Vec<Rational> = g
            .vertices()
            .map(|v| Rational::from(g.degree(v)) - m)
            .collect();
        ChargeLedger {
            final_charge: initial.clone(),
            initial,
            pools: Vec::new(),
            pot: Rational::zero(),
            transfers: Vec::new(),
        }
    }

    fn pay(&mut self, from: Account, to: Account, amount: Rational) {
        for (acc, sign) in [(from, false), (to, true)] {
            let slot = match acc {
                Account::Vertex(v) => &mut self.final_charge[v],
                Account::Pool(i) => &mut self.pools[i].delta,
                Account::Pot => &mut self.pot,
            };
            *slot = if sign { &*slot + &amount } else { &*slot - &amount };
        }
        self.transfers.push(Transfer { from, to, amount });
    }

    pub fn total_initial(&self) -> Rational {
        self.initial.iter().sum()
    }

    /// Vertex charges plus pool deltas plus the pot.
    pub fn total_final(&self) -> Rational {
        let v: Rational = self.final_charge.iter().sum();
        let p: Rational = self.pools.iter().map(|p| &p.delta).sum();
        v + p + &self.pot
    }

    pub fn is_conserved(&self) -> bool {
        self.total_initial() == self.total_final()
    }

    /// Members' final charges plus the pool's delta.
    pub fn pool_total(&self, i: usize) -> Rational {
        let pool = &self.pools[i];
        let members: Rational = pool.vertices.iter().map(|&v| &self.final_charge[v]).sum();
        members + &pool.delta
    }

    pub fn negative_vertices(&self) -> Vec<VertexId> {
        (0..self.final_charge.len())
            .filter(|&v| self.final_charge[v].is_negative())
            .collect()
    }

    /// Every vertex, every pool total and the pot end non-negative.
    pub fn all_nonnegative(&self) -> bool {
        self.negative_vertices().is_empty()
            && (0..self.pools.len()).all(|i| !self.pool_total(i).is_negative())
            && !self.pot.is_negative()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DischargeError {
    #[error("LightForestUnavailable: {0}")]
    LightForestUnavailable(LightForestError),
    #[error("WrongTheorem: parameters are for theorem {0}")]
    WrongTheorem(Theorem),
}

/// Big vertices pay `1 − ε` to their 2-vertex sons, nothing to a father,
/// and `(1 − ε)/2` to any other 2-neighbour.
pub fn discharge_t1(
    g: &Graph,
    params: &SolveParams,
    l: &LightForest,
) -> Result<ChargeLedger, DischargeError> {
    if params.theorem != Theorem::T1 {
        return Err(DischargeError::WrongTheorem(params.theorem));
    }
    let d = params.d;
    let one = Rational::one();
    let full = &one - &params.epsilon;
    let half = &full / &Rational::from(2i64);
    let mut ledger = ChargeLedger::start(g, &params.m);
    for v in g.vertices() {
        if !is_big(g, v, d) {
            continue;
        }
        for &w in g.neighbors(v) {
            if g.degree(w) != 2 || l.father[v] == Some(w) {
                continue;
            }
            let amount = if l.father[w] == Some(v) { full.clone() } else { half.clone() };
            ledger.pay(Account::Vertex(v), Account::Vertex(w), amount);
        }
    }
    Ok(ledger)
}

/// Three steps: small 3⁺ pools pay `ε` to each 2-vertex with exactly one
/// neighbour inside; big vertices pay `1 − 2ε` per son (a bud gate's share
/// goes to its pool), `(1 − ε)/2` to other 2-neighbours except a father,
/// and `2(k − d − 1)ε` to the pot; the pot pays `ε` per internal 2-vertex.
pub fn discharge_t2(
    g: &Graph,
    params: &SolveParams,
    l: &LightForest,
    lhat: &LHat,
) -> Result<ChargeLedger, DischargeError> {
    if params.theorem != Theorem::T2 {
        return Err(DischargeError::WrongTheorem(params.theorem));
    }
    let d = params.d;
    let eps = &params.epsilon;
    let one = Rational::one();
    let two = Rational::from(2i64);
    let son_share = &one - &(&two * eps);
    let half = &(&one - eps) / &two;
    let mut ledger = ChargeLedger::start(g, &params.m);

    let mut pool_of = vec![None; g.n()];
    for (i, c) in small_components(g, d).into_iter().enumerate() {
        for &v in &c.vertices {
            pool_of[v] = Some(i);
        }
        ledger.pools.push(Pool {
            vertices: c.vertices,
            delta: Rational::zero(),
        });
    }

    for w in g.vertices() {
        if g.degree(w) != 2 {
            continue;
        }
        let nb = g.neighbors(w);
        for (j, &x) in nb.iter().enumerate() {
            let Some(i) = pool_of[x] else { continue };
            let other_inside = nb.iter().enumerate().any(|(k, &y)| k != j && pool_of[y] == Some(i));
            let first = nb[..j].iter().all(|&y| pool_of[y] != Some(i));
            if !other_inside && first {
                ledger.pay(Account::Pool(i), Account::Vertex(w), eps.clone());
            }
        }
    }

    for v in g.vertices() {
        if !is_big(g, v, d) {
            continue;
        }
        for &w in g.neighbors(v) {
            if l.father[w] == Some(v) {
                let to = match (l.bud_of[w], pool_of[w]) {
                    (Some(_), Some(i)) => Account::Pool(i),
                    _ => Account::Vertex(w),
                };
                ledger.pay(Account::Vertex(v), to, son_share.clone());
            } else if g.degree(w) == 2 && l.father[v] != Some(w) {
                ledger.pay(Account::Vertex(v), Account::Vertex(w), half.clone());
            }
        }
        let excess = Rational::from(2 * (g.degree(v) - d - 1));
        ledger.pay(Account::Vertex(v), Account::Pot, &excess * eps);
    }

    for &x in &lhat.internal2 {
        ledger.pay(Account::Pot, Account::Vertex(x), eps.clone());
    }
    Ok(ledger)
}

/// Builds whatever the theorem's procedure needs and runs it.
pub fn discharge(g: &Graph, params: &SolveParams) -> Result<ChargeLedger, DischargeError> {
    let l = build_light_forest(g, params.d).map_err(DischargeError::LightForestUnavailable)?;
    match params.theorem {
        Theorem::T1 => discharge_t1(g, params, &l),
        Theorem::T2 => {
            let lhat = build_lhat(g, &l);
            discharge_t2(g, params, &l, &lhat)
        }
    }
}
