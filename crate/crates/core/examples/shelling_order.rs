//! Finds a shelling of a line of overlapping simplices and checks it, then
//! shows the reason a cyclic version has none.

use serre::classify::{check_shelling, is_shellable, ShellOutcome, DEFAULT_BUDGET};
use serre::circulant::upper_interval;
use serre::theorems::interval_complex;
use serre::SimplicialComplex;

fn main() -> serre::Result<()> {
    let line = interval_complex(8, 3);
    if let ShellOutcome::Shellable(order) = is_shellable(&line, DEFAULT_BUDGET)? {
        println!("shelling {order:?} valid: {}", check_shelling(&line, &order)?);
    }
    let cyclic = SimplicialComplex::independence_complex(upper_interval(10, 3)?.graph.graph());
    match is_shellable(&cyclic, DEFAULT_BUDGET)? {
        ShellOutcome::NotShellable(reason) => println!("cyclic intervals: {}", serde_json::to_string(&reason)?),
        other => println!("cyclic intervals: {other:?}"),
    }
    Ok(())
}
