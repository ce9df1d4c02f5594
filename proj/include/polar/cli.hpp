#ifndef POLAR_CLI_HPP
#define POLAR_CLI_HPP

#include "polar/families.hpp"

#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace polar {

enum class PlotKind { Family, KernelSlice, Minimizer };

struct PlotRequest {
    PlotKind what = PlotKind::Family;
    FamilyKind family = FamilyKind::Polar;
    /// Family member, or the n of K_n(x, 0) with K = {1..n}.
    int n = 1;
    /// Index set of the minimizer.
    std::vector<int> indices;
};

/// "x y" lines at grid equally spaced points of [-1, 1]; grid >= 2.
std::string emit_plot_data(const PlotRequest& request, int grid);

/// Rows "n,k,num,den" back into polynomials keyed by n.
std::map<int, Polynomial> parse_table_csv(std::string_view csv);

/// Entry point behind polar-cli; args exclude the program name.
/// Returns 0 on success, 1 on usage errors, 2 on computation errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polar

#endif  // POLAR_CLI_HPP
