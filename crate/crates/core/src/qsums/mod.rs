//! Generating-function sums and the q-analogues of Hardy-Berndt and
//! Dedekind sums.

pub mod genfn;
pub mod regularize;
pub mod trig;
pub mod ysum;

pub use genfn::{eval_gen, GenFnKind, GenFnTag};
pub use regularize::{Extrapolation, RegularizationSchedule};
pub use trig::{classical_trig_series, verify_trig_series};
pub use ysum::{
    q_dedekind_sum, q_hardy_berndt, sum_constant, y_sum, ParityMode, QSumValue, YKind, YRoute, YSumOptions, YSumResult,
};
