// Copyright (c) 2026, genuslab contributors
// SPDX-License-Identifier: Apache-2.0

fn main() {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    let code = genuslab::cli::run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock());
    std::process::exit(code);
}
