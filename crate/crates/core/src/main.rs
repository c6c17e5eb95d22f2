fn main() {
    std::process::exit(coduality::workbench::run());
}
