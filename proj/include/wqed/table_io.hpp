#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wqed {

// Row-major numeric table with named columns, the exchange format of the
// command-line tools. Doubles serialize with 17 significant digits so both
// text formats parse back bit-exact.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

std::string format_double(double v);

void write_csv(std::ostream& os, const Table& t);
void write_json(std::ostream& os, const Table& t);

}  // namespace wqed
