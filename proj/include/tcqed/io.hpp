#ifndef TCQED_IO_HPP
#define TCQED_IO_HPP

#include <iosfwd>
#include <string>

#include "tcqed/params.hpp"
#include "tcqed/sweep.hpp"

namespace tcqed {

// Flat JSON parameter document. All SystemParams keys are required; drive
// keys are optional (amp 1, phase 0 defaults); unknown keys are rejected.
// g1/g2 accept a real number or a [re, im] pair.
struct ParameterFile {
    SystemParams params;
    DriveConfig drive{1.0, 1.0};
};

ParameterFile load_params_json(std::istream& is);
ParameterFile load_params_file(const std::string& path);
void write_params_json(std::ostream& os, const ParameterFile& pf);

// Fixed CSV schema: header "x,out_l,out_r,cavity,atoms", 17 significant
// digits, '\n' newlines.
void write_table_csv(std::ostream& os, const SweepTable& table);

// Parses rows written by write_table_csv back into (x, Observables) pairs.
std::vector<SweepRow> parse_table_csv(std::istream& is);

void write_table_json(std::ostream& os, const SweepTable& table);

} // namespace tcqed

#endif
