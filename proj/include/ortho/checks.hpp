#pragma once

#include <string>
#include <vector>

#include "ortho/spin.hpp"

namespace ortho::checks {

struct Result {
    std::string name;
    bool pass = false;
    std::string detail;
};

Result c01_crystal_sizes();
Result c02_reference_graphs();
Result c03_splitting();
Result c04_s2_split();
Result c05_psymbol_theorem();
Result c06_qsymbol_bijection();
Result c07_kn_criterion();
Result c08_insertions();
Result c09_jeu_de_taquin();
Result c10_spin_extension();

std::vector<Result> run_all();
// Suites: crystal {1,2,3,4}, plactic {5,7,8}, schensted {6}, jdt {9},
// spin {10}, or cN for a single criterion.
std::vector<Result> run_suite(const std::string& suite);
std::vector<std::string> suite_names();

}  // namespace ortho::checks
