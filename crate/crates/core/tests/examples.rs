macro_rules! example {
    ($test:ident, $module:ident, $file:literal) => {
        #[allow(dead_code)]
        mod $module {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }

        #[test]
        fn $test() {
            $module::run_example().expect(concat!($file, " should run"));
        }
    };
}

example!(polynomial_basics_runs, polynomial_basics, "polynomial_basics.rs");
example!(rational_normal_curve_runs, rational_normal_curve, "rational_normal_curve.rs");
example!(star_smoothing_runs, star_smoothing, "star_smoothing.rs");
example!(collapse_invariants_runs, collapse_invariants, "collapse_invariants.rs");
example!(stanley_reisner_homology_runs, stanley_reisner_homology, "stanley_reisner_homology.rs");
example!(projection_and_fiber_runs, projection_and_fiber, "projection_and_fiber.rs");
example!(non_tree_sweep_runs, non_tree_sweep, "non_tree_sweep.rs");
example!(genus_of_curves_runs, genus_of_curves, "genus_of_curves.rs");
example!(file_formats_runs, file_formats, "file_formats.rs");
