#pragma once

#include <string>
#include <vector>

namespace bicross {

// Result of a verification battery: one item per checked identity, with the
// first witness recorded on failure.
struct Report {
    struct Item {
        std::string name;
        bool pass = true;
        std::string witness;  // empty when passing
    };
    std::vector<Item> items;

    bool pass() const {
        for (const auto& it : items)
            if (!it.pass) return false;
        return true;
    }
    void add(std::string name) { items.push_back({std::move(name), true, {}}); }
    void fail(std::string name, std::string witness) {
        items.push_back({std::move(name), false, std::move(witness)});
    }
    std::string first_failure() const {
        for (const auto& it : items)
            if (!it.pass) return it.name + ": " + it.witness;
        return {};
    }
};

}  // namespace bicross
