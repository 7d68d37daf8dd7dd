#include "cantorh/reference.hpp"

namespace cantorh {

const std::vector<double>& reference_steps_left(int m) {
    static const std::vector<double> m2 = {0.60527819};
    static const std::vector<double> m4 = {0.37725094, 0.60254652, 0.78306819};
    static const std::vector<double> m8 = {0.23081722, 0.37469279, 0.48515843,
                                           0.60117033, 0.70056784, 0.78288753,
                                           0.87276904};
    switch (m) {
    case 2:
        return m2;
    case 4:
        return m4;
    case 8:
        return m8;
    default:
        throw ArgumentError("reference_steps_left: no table for this slit count");
    }
}

const std::vector<double>& reference_steps_center(int m) {
    static const std::vector<double> m4 = {0.73555154};
    static const std::vector<double> m8 = {0.50657767, 0.72992958, 0.86334249};
    static const std::vector<double> m16 = {0.32412730, 0.50171513, 0.61794802,
                                            0.72702487, 0.80333761, 0.86206402,
                                            0.92098300};
    switch (m) {
    case 4:
        return m4;
    case 8:
        return m8;
    case 16:
        return m16;
    default:
        throw ArgumentError(
            "reference_steps_center: no table for this slit count");
    }
}

const std::vector<double>& reference_amplitudes_left() {
    static const std::vector<double> table = {0.900316, 0.939343, 0.977556,
                                              1.018398, 1.061124, 1.105679,
                                              1.152042, 1.200444, 1.251569};
    return table;
}

const std::vector<double>& reference_amplitudes_center() {
    static const std::vector<double> table = {2.351932, 2.395871, 2.466099,
                                              2.555452, 2.655781, 2.763722,
                                              2.878107, 2.998958};
    return table;
}

GrowthFit reference_growth_left() {
    GrowthFit fit;
    fit.A = 0.900613;
    fit.b = 0.041069;
    fit.E = 1.78e-6;
    return fit;
}

} // namespace cantorh
