//! End-to-end tests of the `bfhp` binary: pipeline round trip, exit
//! codes, and printed solver output.

use std::path::Path;
use std::process::{Command, Output};

use bfhp::format;

fn bfhp(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bfhp"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("spawn bfhp")
}

fn ok(output: &Output) {
    assert!(
        output.status.success(),
        "exit {:?}, stderr: {}",
        output.status.code(),
        String::from_utf8_lossy(&output.stderr)
    );
}

#[test]
fn full_pipeline_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();

    ok(&bfhp(&["params", "--bits", "128", "--seed", "7", "--out", "params.bin"], d));
    ok(&bfhp(&[
        "keygen", "--params", "params.bin", "--role", "sender", "--seed", "8", "--out",
        "sender.key",
    ], d));
    ok(&bfhp(&[
        "keygen", "--params", "params.bin", "--role", "recipient", "--seed", "9", "--out",
        "recipient.key",
    ], d));

    let (_, recipient) =
        format::decode_recipient_key(&std::fs::read(d.join("recipient.key")).unwrap()).unwrap();
    let peer_pub = format!("{:x}", recipient.e_pub);

    let message = b"attack at dawn";
    std::fs::write(d.join("msg.bin"), message).unwrap();

    ok(&bfhp(&[
        "encrypt", "--params", "params.bin", "--key", "sender.key", "--peer-pub", &peer_pub,
        "--msg-file", "msg.bin", "--out", "ct.bin",
    ], d));
    ok(&bfhp(&[
        "decrypt", "--params", "params.bin", "--key", "recipient.key", "--in", "ct.bin",
        "--out", "plain.bin",
    ], d));

    assert_eq!(std::fs::read(d.join("plain.bin")).unwrap(), message);
}

#[test]
fn tampered_ciphertext_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();

    ok(&bfhp(&["params", "--bits", "64", "--seed", "1", "--out", "params.bin"], d));
    ok(&bfhp(&[
        "keygen", "--params", "params.bin", "--role", "sender", "--seed", "2", "--out", "s.key",
    ], d));
    ok(&bfhp(&[
        "keygen", "--params", "params.bin", "--role", "recipient", "--seed", "3", "--out", "r.key",
    ], d));
    let (_, recipient) =
        format::decode_recipient_key(&std::fs::read(d.join("r.key")).unwrap()).unwrap();
    std::fs::write(d.join("msg.bin"), b"payload").unwrap();
    ok(&bfhp(&[
        "encrypt", "--params", "params.bin", "--key", "s.key", "--peer-pub",
        &format!("{:x}", recipient.e_pub), "--msg-file", "msg.bin", "--out", "ct.bin",
    ], d));

    // Flip one byte inside the C2 payload, keeping the framing intact.
    let n_bits;
    let mut bundle;
    {
        let bytes = std::fs::read(d.join("ct.bin")).unwrap();
        let (n, b) = format::decode_ciphertext(&bytes).unwrap();
        n_bits = n;
        bundle = b;
    }
    bundle.c2[0] ^= 0x01;
    std::fs::write(d.join("ct.bin"), format::encode_ciphertext(n_bits, &bundle)).unwrap();

    let out = bfhp(&[
        "decrypt", "--params", "params.bin", "--key", "r.key", "--in", "ct.bin", "--out",
        "plain.bin",
    ], d);
    assert_eq!(out.status.code(), Some(3));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("ABORT: integrity check failed"), "stderr: {stderr}");
}

#[test]
fn solver_prints_in_box_pairs() {
    let dir = tempfile::tempdir().unwrap();
    let out = bfhp(&[
        "bfhp-solve", "--a1", "13", "--a2", "11", "--g", "1070", "--lo", "32", "--hi", "63",
    ], dir.path());
    ok(&out);
    assert_eq!(String::from_utf8_lossy(&out.stdout), "40 50\n51 37\n");
}

#[test]
fn usage_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let out = bfhp(&["params", "--out", "x.bin"], dir.path()); // missing --bits
    assert_eq!(out.status.code(), Some(2));

    let out = bfhp(&["no-such-command"], dir.path());
    assert_eq!(out.status.code(), Some(2));

    let out = bfhp(&[
        "bfhp-solve", "--a1", "13", "--a2", "11", "--g", "xyz", "--lo", "1", "--hi", "2",
    ], dir.path());
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn malformed_files_exit_4() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();

    std::fs::write(d.join("garbage.bin"), b"not a params file at all").unwrap();
    let out = bfhp(&[
        "keygen", "--params", "garbage.bin", "--role", "sender", "--out", "k.bin",
    ], d);
    assert_eq!(out.status.code(), Some(4));

    // Kind mismatch: a params file where a recipient key is expected.
    ok(&bfhp(&["params", "--bits", "64", "--seed", "4", "--out", "params.bin"], d));
    ok(&bfhp(&["params", "--bits", "64", "--seed", "4", "--out", "ct.bin"], d));
    let out = bfhp(&[
        "decrypt", "--params", "params.bin", "--key", "params.bin", "--in", "ct.bin", "--out",
        "m.bin",
    ], d);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn oversized_message_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    ok(&bfhp(&["params", "--bits", "64", "--seed", "5", "--out", "params.bin"], d));
    ok(&bfhp(&[
        "keygen", "--params", "params.bin", "--role", "sender", "--seed", "6", "--out", "s.key",
    ], d));
    // Nine bytes with a high leading bit cannot sit below a 64-bit prime.
    std::fs::write(d.join("big.bin"), [0xFFu8; 9]).unwrap();
    let out = bfhp(&[
        "encrypt", "--params", "params.bin", "--key", "s.key", "--peer-pub", "ff",
        "--msg-file", "big.bin", "--out", "ct.bin",
    ], d);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn experiment_and_demo_run_seeded() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();

    let out = bfhp(&[
        "bfhp-experiment", "--n", "3", "--m", "13", "--trials", "2000", "--seed", "1",
    ], d);
    ok(&out);
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("empirical:"), "stdout: {stdout}");
    assert!(stdout.contains("2^-n:"), "stdout: {stdout}");

    let out = bfhp(&["rsa-bfhp-demo", "--k", "16", "--e", "3", "--seed", "2"], d);
    ok(&out);
    let stdout = String::from_utf8_lossy(&out.stdout);
    let field = |prefix: &str| {
        stdout
            .lines()
            .find(|l| l.starts_with(prefix))
            .unwrap_or_else(|| panic!("missing '{prefix}' in {stdout}"))
            .trim_start_matches(prefix)
            .trim()
            .to_string()
    };
    assert_eq!(field("M ="), field("recovered M ="));
}

#[test]
fn bench_writes_csv() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    let out = bfhp(&["bench", "--sizes", "64", "--seed", "3", "--out", "report.csv"], d);
    ok(&out);
    let csv = std::fs::read_to_string(d.join("report.csv")).unwrap();
    let mut lines = csv.lines();
    assert_eq!(
        lines.next().unwrap(),
        "n,op,median_ns,msg_bits,ct_bits,pubkey_bits,ratio_mc,ratio_me"
    );
    assert_eq!(lines.count(), 4);

    let out = bfhp(&["bench", "--sizes", "32", "--out", "r.csv"], d);
    assert_eq!(out.status.code(), Some(2));
}
