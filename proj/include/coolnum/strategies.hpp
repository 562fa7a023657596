#pragma once

#include "coolnum/cooling.hpp"
#include "coolnum/generators.hpp"
#include "coolnum/ilt.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace coolnum {

enum class Family { path, cycle, caterpillar, spider, grid, ilt_path };

enum class FormKind { exact, lower_bound, window };

/// A closed-form statement about the cooling number of a family member:
/// an exact value (lo == hi), a lower bound (no hi), or a window [lo, hi].
struct ClosedForm {
    Family family;
    std::map<std::string, int> params;
    FormKind kind;
    int lo = 0;
    std::optional<int> hi;

    bool contains(int value) const { return value >= lo && (! hi || value <= *hi); }
};

std::string to_string(Family family);
std::string to_string(FormKind kind);
Family parse_family(const std::string & name);

/// Throws InvalidArgument for a missing or out-of-range parameter.
ClosedForm closed_form(Family family, const std::map<std::string, int> & params);
std::string closed_form_to_json(const ClosedForm & form);

/// Total order on grid cells: by coordinate sum, ties by smaller first coordinate.
std::strong_ordering simplicial_cmp(GridCoord u, GridCoord v) noexcept;

/// Cools the smallest uncooled cell in simplicial order each round.
class SimplicialPolicy : public SourcePolicy {
public:
    explicit SimplicialPolicy(int n);
    NodeId choose(const Graph & g, const NodeSet & cooled, int round) override;

private:
    std::vector<NodeId> order_;
    std::size_t cursor_ = 0;
};

CoolingTrace grid_simplicial_strategy(int n);

/// [2n - 2*floor(log2(n+3)), 2n - 2*floor(log2(n+3)) + 2]; n >= 2.
ClosedForm grid_cl_window(int n);

/// Diametral path by double sweep, confirmed against all eccentricities.
std::vector<NodeId> diametral_path(const Graph & g);

/// Every other node of a diametral path, ceil((diam+2)/2) entries.
std::vector<NodeId> path_diameter_strategy(const Graph & g);

/// v_1 followed by the pendants v_2', ..., v_{d-1}' of CC_d.
std::vector<NodeId> caterpillar_strategy(int d);

struct SpiderShape {
    int legs = 0;
    int r = 0;
};

/// Recognizes a spider with equal legs laid out as gen_spider does.
/// Throws StrategyMismatch otherwise.
SpiderShape detect_spider(const Graph & g);

struct SpiderRun {
    CoolingTrace trace;
    ClosedForm certified;
};

/// Two-phase strategy on the spider with 2m legs of length r.
SpiderRun spider_strategy(int m, int r);
/// Same, on a given graph; throws StrategyMismatch unless it is a spider with an even number of equal legs.
SpiderRun spider_strategy(const Graph & g);

/// Clone sequence w_i = p'_{i + floor((i-1)/2)}, i = 1..ceil(2n/3), in ILT_t(P_n).
std::vector<NodeId> ilt_path_strategy(const IltGraph & g);
std::vector<NodeId> ilt_path_strategy(int n, int t);

/// Transfers a cooling sequence of ILT_t(G), t >= 2, to ILT_2(G): each entry
/// becomes the first final-iteration clone of its origin, or the second one
/// when the previous entry had the same origin.
std::vector<NodeId> ilt_lift_sequence(std::span<const NodeId> sequence, const IltGraph & from, const IltGraph & to);

} // namespace coolnum
