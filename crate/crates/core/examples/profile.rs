use std::time::Instant;

use fused_hecke::quotient::{build_context, QuotientSpec};

fn main() {
    for (label, spec) in [
        ("A_2", QuotientSpec::symmetric_one_boundary(2)),
        ("C_2,2", QuotientSpec::one_boundary_tl(2)),
        ("A_3", QuotientSpec::symmetric_one_boundary(3)),
        ("C_3,2", QuotientSpec::one_boundary_tl(3)),
    ] {
        let t = Instant::now();
        let ctx = build_context(spec);
        eprintln!(
            "{}: dim {} basis_ok {} in {:.2?}",
            label,
            ctx.dim,
            ctx.basis_theorem_holds(),
            t.elapsed()
        );
    }
}
