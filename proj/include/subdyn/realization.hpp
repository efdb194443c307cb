#pragma once

#include <string>
#include <vector>

#include "subdyn/chabauty.hpp"
#include "subdyn/common.hpp"
#include "subdyn/free_group.hpp"

namespace subdyn {

// The permutation action of the F2 generators on the cosets of a
// finite-index subgroup H; coset 0 is H itself.
struct CosetTable {
    int degree = 0;
    std::vector<int> perm_a;  // images of cosets under a
    std::vector<int> perm_b;

    int act_letter(char c, int coset) const;
    int act_word(const FreeWord& w, int coset) const;  // left action: uv acts as u after v
};

// Validates bijectivity and transitivity.
CosetTable make_coset_table(int degree, std::vector<int> perm_a, std::vector<int> perm_b);

// File format: "degree=d", then per generator either image notation
//   a: 1 0 3 2
// or cycle notation
//   a: (0 1)(2 3)
CosetTable parse_coset_table(const std::string& text);
CosetTable load_coset_table(const std::string& path);

// Built-in examples.
CosetTable parity_table();            // index 2, H = even-length words
CosetTable index3_nonnormal_table();  // a = (0 1 2), b = id

// w in H iff w fixes the base coset.
bool membership(const CosetTable& t, const FreeWord& w);

// Shortest coset representatives u_c with u_c * 0 = c.
std::vector<FreeWord> coset_representatives(const CosetTable& t);

// Schreier generators of H = Stab(0): u_{s c}^{-1} s u_c over all cosets
// c and letters s.  They generate H.
std::vector<FreeWord> schreier_generators(const CosetTable& t);

// g normalizes H iff it conjugates every Schreier generator into H.
bool in_normalizer(const CosetTable& t, const FreeWord& g);

// Windows of the distinct conjugates g H g^{-1} at radius n.
std::vector<SubgroupWindow<F2Ops>> conjugate_orbit(const CosetTable& t, int n);

struct FiniteSystemPoint {
    int conjugate = 0;  // index into the distinct-conjugate list
    int coset = 0;
};

struct RealizationResult {
    std::vector<FiniteSystemPoint> orbit;                  // orbit of (H, H)
    SubgroupWindow<F2Ops> base_stabilizer;                 // G_{x0} cap B_n
    std::vector<SubgroupWindow<F2Ops>> stability_system;   // stabilizers over the orbit
    std::vector<SubgroupWindow<F2Ops>> conjugates;         // conjugate_orbit(t, n)
    bool stability_matches_conjugates = false;
    bool sandwich_holds = false;  // H <= G_x <= N(H) at every orbit point
};

RealizationResult realize_finite(const CosetTable& t, int n);

// Window-scale fixed-point sets: all {0,1} patterns on the F2 ball B_w
// constant on the orbits of left multiplication by W's members.
std::vector<std::string> fixed_point_window(const SubgroupWindow<F2Ops>& w, int pattern_radius);

}  // namespace subdyn
