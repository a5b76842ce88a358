//! Exact character tables of finite permutation groups via Dixon-Schneider,
//! and classification of groups by codegree multiplicities.

pub mod catalog;
pub mod chartab;
pub mod codegree;
pub mod constructors;
pub mod gfp;
pub mod permgrp;
pub mod report;
pub mod suite;
