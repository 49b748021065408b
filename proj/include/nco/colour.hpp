#ifndef NCO_COLOUR_HPP
#define NCO_COLOUR_HPP

#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "nco/util.hpp"

namespace nco {

// Colours are 1..k. A shape is the output colour plus the input colours
// of one labelled operation; arity is always >= 2 (units are implicit,
// one per colour, and never appear as labels).
struct Shape {
    int out = 1;
    std::vector<int> ins;

    int arity() const { return static_cast<int>(ins.size()); }
};

class ColouredCollection {
public:
    explicit ColouredCollection(int k = 1) : k_(k) {
        if (k < 1) throw std::invalid_argument("colour count must be >= 1");
    }

    int add(const std::string& name, Shape shape) {
        if (shape.arity() < 2)
            throw std::invalid_argument("label arity must be >= 2: " + name);
        if (shape.out < 1 || shape.out > k_)
            throw std::invalid_argument("output colour out of range: " + name);
        for (int c : shape.ins)
            if (c < 1 || c > k_)
                throw std::invalid_argument("input colour out of range: " + name);
        if (index_.count(name))
            throw std::invalid_argument("duplicate label: " + name);
        int id = static_cast<int>(names_.size());
        names_.push_back(name);
        shapes_.push_back(std::move(shape));
        index_[name] = id;
        return id;
    }

    int k() const { return k_; }
    int size() const { return static_cast<int>(names_.size()); }
    const Shape& shape(int id) const { return shapes_.at(id); }
    const std::string& name(int id) const { return names_.at(id); }

    int find(const std::string& name) const {
        auto it = index_.find(name);
        return it == index_.end() ? -1 : it->second;
    }

    int require(const std::string& name) const {
        int id = find(name);
        if (id < 0) throw std::invalid_argument("unknown label: " + name);
        return id;
    }

    // 1-coloured collection over binary labels, for rewriting in plain operads.
    static ColouredCollection uncoloured_binary(const std::vector<std::string>& names) {
        ColouredCollection c(1);
        for (const auto& n : names) c.add(n, Shape{1, {1, 1}});
        return c;
    }

private:
    int k_;
    std::vector<std::string> names_;
    std::vector<Shape> shapes_;
    std::unordered_map<std::string, int> index_;
};

}  // namespace nco

#endif
