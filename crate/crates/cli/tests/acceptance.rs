//! One test per acceptance check at the default tolerances. Each prints its
//! PASS/FAIL line before asserting.

use eigenwell_cli::verify::run_id;
use eigenwell_cli::Tolerances;

fn criterion(id: &str) {
    let c = run_id(id, &Tolerances::default()).expect("known check id");
    println!("{}", c.line());
    assert!(c.pass, "{}", c.line());
}

macro_rules! acceptance {
    ($($name:ident => $id:literal),* $(,)?) => {
        $(
            #[test]
            fn $name() {
                criterion($id);
            }
        )*
    };
}

acceptance! {
    c1a_box_spectrum => "1a",
    c1b_ho_spectrum => "1b",
    c1c_hydrogen_spectrum => "1c",
    c1d_iso_ho_spectrum => "1d",
    c2a_box_orthonormal => "2a",
    c2b_ho_orthonormal => "2b",
    c2c_hydrogen_orthonormal => "2c",
    c2d_iso_ho_orthonormal => "2d",
    c3a_box_residual => "3a",
    c3b_ho_residual => "3b",
    c3c_hydrogen_residual => "3c",
    c3d_iso_ho_residual => "3d",
    c4a_commutator => "4a",
    c4b_fock_states => "4b",
    c4c_coordinate_raising => "4c",
    c5a_ground_state_peak => "5a",
    c5b_mean_radius => "5b",
    c5c_mean_inverse_radius => "5c",
    c5d_degeneracy => "5d",
    c6a_action_integral => "6a",
    c6b_wilson_sommerfeld_levels => "6b",
    c6c_transition_wavelength => "6c",
    c6d_ground_energy_ev => "6d",
    c7a_sh_envelope_form => "7a-sh",
    c7a_darboux_envelope_form => "7a-d",
    c7a_vnw_envelope_form => "7a-vnw",
    c7b_sh_residual => "7b-sh",
    c7b_darboux_residual => "7b-d",
    c7b_vnw_residual => "7b-vnw",
    c7c_sh_finite_at_nodes => "7c-sh",
    c7c_darboux_finite_at_nodes => "7c-d",
    c7c_vnw_finite_at_nodes => "7c-vnw",
    c7d_sh_normalizable => "7d-sh",
    c7d_darboux_normalizable => "7d-d",
    c7d_vnw_normalizable => "7d-vnw",
    c7e_sh_asymptote => "7e-sh",
    c7e_darboux_asymptote => "7e-d",
    c7e_vnw_asymptote => "7e-vnw",
    c7f_vnw_darboux_identity => "7f",
    c8a_csv_thread_independent => "8a",
    c8b_report_repeatable => "8b",
}

#[test]
fn c8_verify_binary_is_byte_identical_across_runs() {
    let run = || {
        std::process::Command::new(env!("CARGO_BIN_EXE_eigenwell"))
            .arg("verify")
            .output()
            .expect("binary runs")
    };
    let (a, b) = (run(), run());
    let same = a.stdout == b.stdout && a.status.code() == b.status.code();
    println!("{} 8 determinism verify_stdout_identical={same}", if same { "PASS" } else { "FAIL" });
    assert!(same);
}
