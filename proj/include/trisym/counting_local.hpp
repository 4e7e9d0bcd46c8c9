#pragma once

#include <complex>
#include <optional>

#include "trisym/cubic_forms.hpp"

namespace trisym {

struct OrbitTable {
    long base_d = 0;
    FracIdealR type_ideal;
    KElem Delta;
    std::vector<CubicForm> representatives;
    std::vector<bool> projective;
    std::vector<bool> reducible;
    bool experimental = false;  // quadratic base: box completeness not certified
    long count_cl3 = -1;        // filled by count_cl3()
};

// complete GL(R + A)-orbit list of discriminant Delta (base Z; for an
// imaginary quadratic base the table is experimental)
OrbitTable enumerate_orbits(const BaseField& F, const FracIdealR& type_ideal, const KElem& Delta,
                            int workers = 1);

// projective orbit count divided by 3^(s + epsilon)
long count_cl3(const BaseField& F, const FracIdealR& type_ideal, const KElem& Delta,
               int workers = 1);

// class number and 3-torsion count of the form class group of discriminant
// Delta, from reduced binary quadratic forms and composition only
std::pair<long, long> class_group_oracle_Z(long Delta);

struct DensityReport {
    ZZ p;
    int residue_degree = 1;
    long residue_size = 0;
    bool divides_type_ideal = false;
    long long projective_count = 0;
    long long total_count = 0;
    QQ density;
};

DensityReport local_density_projective(const BaseField& F, const PrimeIdealR& P,
                                       const FracIdealR& type_ideal, int workers = 1,
                                       long residue_cap = 49);

// forms over a completion of K (doubles; archimedean checks only)
struct NumCubic {
    std::complex<double> a, b, c, d;
};

std::complex<double> num_disc(const NumCubic& f);
NumCubic archimedean_normal_form(std::complex<double> Delta, bool complex_place);

// order of the GL2(R)-stabilizer of a nondegenerate real form: 2 or 6
int stabilizer_order_numeric(const NumCubic& f, double tol = 1e-9);

// exact parabolic reduction of (0, b, c, d) to (0, 1, 0, d') when b != 0
std::pair<GroupElem, CubicForm> parabolic_reduce(const BaseField& F, const CubicForm& f);

// canonical label of the GL- or SL-orbit of an integral form over Z
std::string orbit_key_Z(const BaseField& F, const CubicForm& f, Group grp);

}  // namespace trisym
