//! Acceptance suite: runs every certification criterion at its stated
//! tolerance and prints one pass/fail line per criterion. The CLI command
//! `verify-paper` executes the same checks.

use nimedge::verify::criteria;

fn run(id: usize) {
    let all = criteria();
    let criterion = &all[id - 1];
    assert_eq!(criterion.id, id);
    match (criterion.run)() {
        Ok(detail) => println!(
            "criterion {:>2} PASS  {} — {detail}",
            criterion.id, criterion.name
        ),
        Err(reason) => {
            println!(
                "criterion {:>2} FAIL  {} — {reason}",
                criterion.id, criterion.name
            );
            panic!("criterion {} failed: {reason}", criterion.id);
        }
    }
}

#[test]
fn criterion_01_three_triangle_template_number_and_niceness() {
    run(1);
}

#[test]
fn criterion_02_three_pentagon_template_number_not_nice() {
    run(2);
}

#[test]
fn criterion_03_homomorphic_template_number_for_two_triangles() {
    run(3);
}

#[test]
fn criterion_04_finite_field_witness_for_four_triangles() {
    run(4);
}

#[test]
fn criterion_05_balanced_blow_up_lower_bound_at_50() {
    run(5);
}

#[test]
fn criterion_06_exact_triangle_maxima() {
    run(6);
}

#[test]
fn criterion_07_four_cycle_maximum_meets_turan_at_7() {
    run(7);
}

#[test]
fn criterion_08_property_suites() {
    run(8);
}

#[test]
fn criterion_09_tree_overlay_packing_at_81() {
    run(9);
}

#[test]
fn criterion_10_nested_star_bound_for_matchings() {
    run(10);
}
