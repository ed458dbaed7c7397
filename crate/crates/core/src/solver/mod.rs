//! Backend-agnostic interface to linear and mixed-integer linear programming.
//!
//! Optimization modules build a [`ModelHandle`] (variables, linear constraints,
//! objective) and hand it to a [`Solver`] selected by a backend key at run
//! time. The interface exposes what the decomposition layer needs from an LP
//! solve: optimal duals (row prices and bound reduced costs) and, on an
//! infeasible LP, a Farkas-style certificate emulated through a phase-1
//! auxiliary problem when the backend does not provide rays natively.

mod export;
mod highs_backend;

pub use export::write_lp;

use crate::error::{Error, Result};
use std::time::Duration;

/// Handle to a decision variable of a [`ModelHandle`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct VarId(pub(crate) usize);

impl VarId {
    pub fn index(self) -> usize {
        self.0
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ObjSense {
    Minimize,
    Maximize,
}

/// Sense of a linear constraint `terms (sense) rhs`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConstraintSense {
    Le,
    Ge,
    Eq,
}

#[derive(Clone, Debug)]
pub(crate) struct Variable {
    pub name: String,
    pub lo: f64,
    pub hi: f64,
    pub integer: bool,
}

#[derive(Clone, Debug)]
pub(crate) struct Constraint {
    pub name: String,
    pub terms: Vec<(VarId, f64)>,
    pub sense: ConstraintSense,
    pub rhs: f64,
}

/// An in-memory LP/MILP: variables with bounds and integrality, linear
/// constraints, and a linear objective.
#[derive(Clone, Debug)]
pub struct ModelHandle {
    name: String,
    sense: ObjSense,
    pub(crate) vars: Vec<Variable>,
    pub(crate) cons: Vec<Constraint>,
    objective: Vec<f64>,
    obj_offset: f64,
}

impl ModelHandle {
    pub fn new(name: impl Into<String>, sense: ObjSense) -> Self {
        Self {
            name: name.into(),
            sense,
            vars: Vec::new(),
            cons: Vec::new(),
            objective: Vec::new(),
            obj_offset: 0.0,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn sense(&self) -> ObjSense {
        self.sense
    }

    /// Adds a continuous variable with bounds `[lo, hi]`.
    pub fn add_var(&mut self, name: impl Into<String>, lo: f64, hi: f64) -> VarId {
        debug_assert!(lo <= hi, "variable bounds must satisfy lo <= hi");
        let id = VarId(self.vars.len());
        self.vars.push(Variable {
            name: name.into(),
            lo,
            hi,
            integer: false,
        });
        self.objective.push(0.0);
        id
    }

    /// Adds a binary variable.
    pub fn add_binary(&mut self, name: impl Into<String>) -> VarId {
        let id = self.add_var(name, 0.0, 1.0);
        self.vars[id.0].integer = true;
        id
    }

    /// Adds `coef` to the objective coefficient of `var`.
    pub fn add_obj(&mut self, var: VarId, coef: f64) {
        self.objective[var.0] += coef;
    }

    /// Adds a constant to the objective.
    pub fn add_obj_offset(&mut self, offset: f64) {
        self.obj_offset += offset;
    }

    /// Adds a linear constraint and returns its row index.
    pub fn add_constraint(
        &mut self,
        name: impl Into<String>,
        terms: Vec<(VarId, f64)>,
        sense: ConstraintSense,
        rhs: f64,
    ) -> usize {
        self.cons.push(Constraint {
            name: name.into(),
            terms,
            sense,
            rhs,
        });
        self.cons.len() - 1
    }

    pub fn num_vars(&self) -> usize {
        self.vars.len()
    }

    pub fn num_constraints(&self) -> usize {
        self.cons.len()
    }

    pub fn var_name(&self, var: VarId) -> &str {
        &self.vars[var.0].name
    }

    pub fn var_bounds(&self, var: VarId) -> (f64, f64) {
        (self.vars[var.0].lo, self.vars[var.0].hi)
    }

    pub fn set_var_bounds(&mut self, var: VarId, lo: f64, hi: f64) {
        self.vars[var.0].lo = lo;
        self.vars[var.0].hi = hi;
    }

    pub fn is_integer(&self, var: VarId) -> bool {
        self.vars[var.0].integer
    }

    pub fn has_integer_vars(&self) -> bool {
        self.vars.iter().any(|v| v.integer)
    }

    pub fn objective_coef(&self, var: VarId) -> f64 {
        self.objective[var.0]
    }

    pub fn obj_offset(&self) -> f64 {
        self.obj_offset
    }

    /// Objective value of a primal point, including the constant offset.
    pub fn eval_objective(&self, primal: &[f64]) -> f64 {
        self.obj_offset
            + self
                .objective
                .iter()
                .zip(primal)
                .map(|(c, x)| c * x)
                .sum::<f64>()
    }

    /// Row activity `terms . primal` of constraint `row`.
    pub fn eval_row(&self, row: usize, primal: &[f64]) -> f64 {
        self.cons[row]
            .terms
            .iter()
            .map(|&(v, c)| c * primal[v.0])
            .sum()
    }

    /// Checks all coefficients are finite and bounds are ordered.
    pub fn validate(&self) -> Result<()> {
        for v in &self.vars {
            if v.lo > v.hi || v.lo.is_nan() || v.hi.is_nan() {
                return Err(Error::InvalidModel(format!(
                    "variable {} has bounds [{}, {}]",
                    v.name, v.lo, v.hi
                )));
            }
        }
        for c in &self.cons {
            if !c.rhs.is_finite() || c.terms.iter().any(|(_, a)| !a.is_finite()) {
                return Err(Error::InvalidModel(format!(
                    "constraint {} has non-finite data",
                    c.name
                )));
            }
        }
        if self.objective.iter().any(|c| !c.is_finite()) {
            return Err(Error::InvalidModel("non-finite objective".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SolveStatus {
    Optimal,
    Infeasible,
    Unbounded,
    /// Iteration/time limit, or a numerical failure surfaced with diagnostics.
    Limit,
}

/// Multipliers certifying LP infeasibility, obtained from the phase-1
/// auxiliary problem (minimize total constraint violation).
///
/// For every `x` that leaves the rows feasible,
/// `sum_r row_multipliers[r] * rhs_r_as_function_of_x + bound_term <= 0`;
/// at the certified point the expression is strictly positive.
#[derive(Clone, Debug)]
pub struct FarkasCertificate {
    pub row_multipliers: Vec<f64>,
    /// Contribution of finite variable bounds, `mu_lo . lo + mu_hi . hi`.
    pub bound_term: f64,
}

#[derive(Clone, Debug)]
pub struct SolveResult {
    pub status: SolveStatus,
    /// Objective at the returned primal point (offset included); meaningful
    /// for `Optimal` and for `Limit` with an incumbent.
    pub objective: f64,
    /// Primal values; populated for `Optimal` (and `Limit` with incumbent).
    pub primal: Vec<f64>,
    /// Constraint duals (LP only), one per row, sign convention of a
    /// minimization problem: `>=` rows have non-negative duals.
    pub row_duals: Vec<f64>,
    /// Bound reduced costs (LP only), one per variable.
    pub col_duals: Vec<f64>,
    /// Primal unbounded direction; present iff status is `Unbounded`.
    pub ray: Option<Vec<f64>>,
    /// Infeasibility certificate; present iff an LP solve is `Infeasible`.
    pub farkas: Option<FarkasCertificate>,
    pub wall: Duration,
}

impl SolveResult {
    /// Dual objective `sum_r dual_r * rhs_r + bound_term` of an optimal LP.
    /// Equals the primal objective (minus offset) by strong duality.
    pub fn dual_objective(&self, model: &ModelHandle) -> f64 {
        let rows: f64 = self
            .row_duals
            .iter()
            .zip(&model.cons)
            .map(|(d, c)| d * c.rhs)
            .sum();
        rows + self.bound_term(model)
    }

    /// Splits reduced costs against finite bounds:
    /// positive reduced cost binds the lower bound, negative the upper.
    pub fn bound_term(&self, model: &ModelHandle) -> f64 {
        self.col_duals
            .iter()
            .zip(&model.vars)
            .map(|(&r, v)| {
                if r > 0.0 && v.lo.is_finite() {
                    r * v.lo
                } else if r < 0.0 && v.hi.is_finite() {
                    r * v.hi
                } else {
                    0.0
                }
            })
            .sum()
    }
}

/// A backend capable of solving the models this crate builds.
pub trait Backend: Send + Sync {
    fn solve_lp(&self, model: &ModelHandle) -> Result<SolveResult>;
    fn solve_milp(
        &self,
        model: &ModelHandle,
        gap_tol: f64,
        time_limit: Option<Duration>,
    ) -> Result<SolveResult>;
}

/// Solver façade; the backend is chosen by key at run time.
pub struct Solver {
    backend: Box<dyn Backend>,
    key: String,
}

impl Solver {
    pub fn from_key(key: &str) -> Result<Self> {
        match key {
            "highs" => Ok(Self {
                backend: Box::new(highs_backend::HighsBackend),
                key: key.to_string(),
            }),
            other => Err(Error::UnknownBackend(other.to_string())),
        }
    }

    pub fn key(&self) -> &str {
        &self.key
    }

    /// Solves a pure LP. Errors if the model declares integer variables.
    pub fn solve_lp(&self, model: &ModelHandle) -> Result<SolveResult> {
        if model.has_integer_vars() {
            return Err(Error::InvalidModel(
                "solve_lp called on a model with integer variables".into(),
            ));
        }
        model.validate()?;
        self.backend.solve_lp(model)
    }

    pub fn solve_milp(
        &self,
        model: &ModelHandle,
        gap_tol: f64,
        time_limit: Option<Duration>,
    ) -> Result<SolveResult> {
        model.validate()?;
        if model.has_integer_vars() {
            self.backend.solve_milp(model, gap_tol, time_limit)
        } else {
            self.backend.solve_lp(model)
        }
    }
}

impl Default for Solver {
    fn default() -> Self {
        Self::from_key("highs").expect("built-in backend")
    }
}

#[cfg(test)]
mod tests;
