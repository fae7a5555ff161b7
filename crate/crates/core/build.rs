fn main() {
    // Dense eigendecompositions go through the system LAPACK (dgeev).
    println!("cargo:rustc-link-lib=dylib=lapack");
}
