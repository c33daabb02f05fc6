//! Verify the printed quotient-matrix polynomials and the root-membership
//! claims that pin the sporadic parameter pairs.
//!
//! ```sh
//! cargo run --release --example section4_check
//! ```

use speccat::families::section4::verify_section4_polynomials;

fn main() {
    let report = verify_section4_polynomials();
    for c in &report.identities {
        println!(
            "identity   {:<46} {} ({} grid points)",
            c.name,
            if c.pass { "ok" } else { "FAIL" },
            c.grid_points
        );
    }
    for c in &report.membership {
        println!(
            "membership {:<66} {} ({} points searched)",
            c.name,
            if c.pass { "ok" } else { "FAIL" },
            c.searched
        );
    }
    std::process::exit(if report.all_pass() { 0 } else { 1 });
}
