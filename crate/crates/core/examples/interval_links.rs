//! Complexes whose every nonempty link is shellable but which are not
//! shellable themselves.

use serre::theorems::verify_interval_links;

fn main() -> serre::Result<()> {
    for (n, d) in [(7, 2), (10, 3), (13, 4)] {
        let r = verify_interval_links(n, d)?;
        println!(
            "n={n:<3} d={d}  facets are intervals {}  not shellable {}  links shellable {}  ({} orbit faces)",
            r.facets_are_intervals, r.complex_not_shellable, r.nonempty_links_shellable, r.faces_checked
        );
    }
    Ok(())
}
