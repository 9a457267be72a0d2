#pragma once

#include <cstddef>
#include <deque>
#include <stdexcept>
#include <string>
#include <vector>

#include "widow/rng.hpp"

namespace widow::testing {

/// Replays a fixed list of uniform and normal draws and fails loudly when the
/// consumer asks for a draw of the wrong kind or runs past the end.
class TapeSource final : public RandomSource {
public:
    TapeSource(std::vector<double> uniforms, std::vector<double> normals)
        : uniforms_(uniforms.begin(), uniforms.end()), normals_(normals.begin(), normals.end()) {}

    double uniform() override { return pop(uniforms_, "uniform"); }
    double normal() override { return pop(normals_, "normal"); }
    using RandomSource::uniform;

    std::size_t remaining() const { return uniforms_.size() + normals_.size(); }

private:
    static double pop(std::deque<double>& q, const char* what) {
        if (q.empty()) throw std::runtime_error(std::string("tape exhausted: ") + what);
        const double v = q.front();
        q.pop_front();
        return v;
    }

    std::deque<double> uniforms_;
    std::deque<double> normals_;
};

/// Wraps another source and records every draw in order.
class RecordingSource final : public RandomSource {
public:
    explicit RecordingSource(RandomSource& inner) : inner_(inner) {}

    double uniform() override {
        uniforms.push_back(inner_.uniform());
        return uniforms.back();
    }
    double normal() override {
        normals.push_back(inner_.normal());
        return normals.back();
    }
    using RandomSource::uniform;

    std::vector<double> uniforms;
    std::vector<double> normals;

private:
    RandomSource& inner_;
};

}  // namespace widow::testing
