macro_rules! example {
    ($module:ident, $file:literal) => {
        #[allow(dead_code)]
        mod $module {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));

            #[test]
            fn runs() {
                run_example().expect(concat!($file, " should run"));
            }
        }
    };
}

example!(field_arithmetic, "field_arithmetic.rs");
example!(sequences, "sequences.rs");
example!(distribution, "distribution.rs");
example!(exponential_sums, "exponential_sums.rs");
example!(verify_report, "verify_report.rs");
example!(sampled_large_field, "sampled_large_field.rs");
