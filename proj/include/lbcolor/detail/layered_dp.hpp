#pragma once

#include <map>
#include <utility>
#include <vector>

#include "lbcolor/detail/tuple.hpp"

namespace lbcolor::detail {

/// Layered DP shared by the per-part and per-component solvers: layer i maps
/// each reachable tuple to its best value and the option that produced it.
/// options[i] lists (contribution, value) pairs for item i.
class LayeredDp {
public:
    using Options = std::vector<std::vector<std::pair<Tuple, Weight>>>;

    bool run(const Options& options, const Tuple& cap, bool maximize) {
        layers_.assign(options.size() + 1, {});
        layers_[0].emplace(Tuple(cap.size(), 0), Step{});
        Tuple next;
        for (std::size_t i = 0; i < options.size(); ++i) {
            for (const auto& [tuple, step] : layers_[i]) {
                for (std::size_t o = 0; o < options[i].size(); ++o) {
                    const auto& [delta, value] = options[i][o];
                    if (!add_within(tuple, delta, cap, next)) continue;
                    const Weight total = step.value + value;
                    auto [it, inserted] = layers_[i + 1].try_emplace(next, Step{total, tuple, static_cast<int>(o)});
                    if (!inserted && maximize && total > it->second.value)
                        it->second = Step{total, tuple, static_cast<int>(o)};
                }
            }
            if (layers_[i + 1].empty()) return false;
        }
        return layers_.back().count(cap) > 0;
    }

    /// Option index chosen for each item on the path ending at `target`.
    std::vector<int> trace(const Tuple& target) const {
        std::vector<int> choice(layers_.size() - 1);
        Tuple cur = target;
        for (std::size_t i = layers_.size() - 1; i > 0; --i) {
            const Step& s = layers_[i].at(cur);
            choice[i - 1] = s.choice;
            cur = s.prev;
        }
        return choice;
    }

private:
    struct Step {
        Weight value = 0;
        Tuple prev;
        int choice = -1;
    };
    std::vector<std::map<Tuple, Step>> layers_;
};

}  // namespace lbcolor::detail
