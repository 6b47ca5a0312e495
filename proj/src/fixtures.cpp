#include "recimap/fixtures.hpp"

#include <stdexcept>

namespace recimap {

std::vector<SystemConfig> builtin_fixtures() {
    std::vector<SystemConfig> out;

    {
        SystemConfig c;
        c.name = "scaling_third";
        c.lengths = {"1"};
        c.permutation = {0};
        c.involution_s = "1/3";
        out.push_back(std::move(c));
    }
    {
        // Exchange (A,B)(C,D): two circle rotations glued side by side.
        // Lengths read off the figure coordinates; s matches the A|B block
        // so the involution exchanges exactly the two circles.
        SystemConfig c;
        c.name = "pair_rotation";
        c.lengths = {"121/500", "91/1000", "187/500", "293/1000"};
        c.permutation = {1, 0, 3, 2};
        c.involution_s = "333/1000";
        out.push_back(std::move(c));
    }
    {
        // Same exchange with lengths in Q(sqrt(2)); the return map rotates
        // by an irrational number, so the composition is ergodic.
        SystemConfig c;
        c.name = "pair_rotation_sqrt2";
        c.field_d = 2;
        c.lengths = {"7/12-1/4*sqrt(2)", "-1/4+1/4*sqrt(2)", "1/3", "1/3"};
        c.permutation = {1, 0, 3, 2};
        c.involution_s = "1/3";
        out.push_back(std::move(c));
    }
    {
        SystemConfig c;
        c.name = "wandering";
        c.lengths = {"1/9", "2/9", "4/9", "2/9"};
        c.permutation = {1, 3, 2, 0};
        c.involution_s = "1/3";
        out.push_back(std::move(c));
    }
    {
        SystemConfig c;
        c.name = "nonsurjective";
        c.lengths = {"1/6", "1/6", "1/6", "1/2"};
        c.permutation = {1, 3, 0, 2};
        c.involution_s = "1/3";
        out.push_back(std::move(c));
    }
    {
        SystemConfig c;
        c.name = "identity";
        c.lengths = {"1"};
        c.permutation = {0};
        c.involution_s = "2/5";
        out.push_back(std::move(c));
    }
    {
        // Three intervals exchanged in reverse order, with suspension data.
        SystemConfig c;
        c.name = "figure1";
        c.lengths = {"3/10", "1/2", "1/5"};
        c.permutation = {2, 1, 0};
        c.involution_s = "1/3";
        c.zeta = {{{"3/10", "1"}, {"1/2", "1/5"}, {"1/5", "-1"}}};
        out.push_back(std::move(c));
    }
    return out;
}

SystemConfig fixture(const std::string& name) {
    for (auto& cfg : builtin_fixtures())
        if (cfg.name == name) return cfg;
    throw std::invalid_argument("unknown fixture: " + name);
}

}  // namespace recimap
