// Copyright (c) 2026, genuslab contributors
// SPDX-License-Identifier: Apache-2.0

//! Exact Hirzebruch chi_y-genera, multiplicativity congruences for fiber
//! bundle triples, and the Z/2 and Z/4 quadratic form invariants that
//! detect the mod 8 defect.

pub mod algebra;
pub mod genus;
pub mod congruence;
pub mod json;
pub mod forms;
pub mod models;
pub mod selftest;
pub mod cli;
