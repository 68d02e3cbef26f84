#include "tilered/verify.hpp"

#include <algorithm>
#include <sstream>

namespace tilered {

PeriodicSetTuple solution_to_tuple(const FiniteInstance& inst, const Solution& s) {
    std::vector<std::vector<IntVec>> base;
    for (const auto& positions : s.positions) {
        std::vector<IntVec> comp;
        for (Int a : positions) comp.push_back(inst.Q.vec_of(a));
        base.push_back(std::move(comp));
    }
    return PeriodicSetTuple::canonical(inst.G.dim(), std::move(base), inst.Q.lattice());
}

std::string VerifyReport::table() const {
    std::ostringstream os;
    os << "side        solutions\n";
    os << "quotient    " << count_gamma << "\n";
    os << "Z^d         " << count_z << "\n";
    os << "status      " << (ok ? "OK" : "MISMATCH") << "\n";
    for (const auto& m : mismatches) os << "  " << m << "\n";
    return os.str();
}

VerifyReport verify_reduction(const ReductionInstance& red, const Lattice& P, int jobs) {
    VerifyReport rep;
    const int d = red.G.dim();
    const Int N = red.R.N;

    FiniteInstance gamma_inst = build_instance(red.G, P, red.F);
    SolutionSet gamma_sols = solve(gamma_inst, SolveMode::All, true, jobs);
    rep.count_gamma = gamma_sols.count;

    QuotientGroup trivial(d, Lattice::zero(d));
    Lattice z_period = scale_lattice(N, gamma_inst.Q.lattice());
    FiniteInstance z_inst = build_instance(trivial, z_period, red.Ftilde);
    SolutionSet z_sols = solve(z_inst, SolveMode::All, true, jobs);
    rep.count_z = z_sols.count;

    std::vector<PeriodicSetTuple> lifted;
    for (const auto& s : gamma_sols.solutions)
        lifted.push_back(lift_cotiles(red.G, solution_to_tuple(gamma_inst, s), N));
    std::vector<PeriodicSetTuple> z_tuples;
    for (const auto& s : z_sols.solutions) z_tuples.push_back(solution_to_tuple(z_inst, s));

    auto tuple_key = [](const PeriodicSetTuple& t) {
        std::ostringstream os;
        for (const auto& comp : t.base) {
            for (const auto& b : comp) os << vec_to_string(b);
            os << "|";
        }
        return os.str();
    };
    std::vector<std::string> lk, zk;
    for (const auto& t : lifted) lk.push_back(tuple_key(t));
    for (const auto& t : z_tuples) zk.push_back(tuple_key(t));
    std::sort(lk.begin(), lk.end());
    std::sort(zk.begin(), zk.end());

    rep.ok = true;
    if (lk != zk) {
        rep.ok = false;
        for (const auto& key : lk)
            if (!std::binary_search(zk.begin(), zk.end(), key))
                rep.mismatches.push_back("lifted quotient solution unmatched: " + key);
        for (const auto& key : zk)
            if (!std::binary_search(lk.begin(), lk.end(), key))
                rep.mismatches.push_back("Z^d solution unmatched: " + key);
    }

    // each Z^d solution must project back to an enumerated quotient solution
    std::vector<std::string> gk;
    for (const auto& s : gamma_sols.solutions)
        gk.push_back(tuple_key(solution_to_tuple(gamma_inst, s)));
    std::sort(gk.begin(), gk.end());
    for (const auto& t : z_tuples) {
        try {
            PeriodicSetTuple back = project_cotiles(red.G, t, N);
            if (!std::binary_search(gk.begin(), gk.end(), tuple_key(back))) {
                rep.ok = false;
                rep.mismatches.push_back("projected solution not found on quotient side: " +
                                         tuple_key(back));
            }
        } catch (const std::exception& e) {
            rep.ok = false;
            rep.mismatches.push_back(std::string("projection failed: ") + e.what());
        }
    }
    return rep;
}

std::vector<Solution> enumerate_periodic_partitions(const RigidTileSet& R,
                                                    const FiniteQuotient& Q) {
    const int d = R.d;
    std::vector<IntVec> ngens;
    for (int i = 0; i < d; ++i) {
        IntVec e(d, 0);
        e[i] = R.N;
        ngens.push_back(std::move(e));
    }
    std::vector<Int> image = Q.subgroup_image(ngens);  // image of N Z^d
    std::vector<IntVec> nl_gens;
    for (const auto& w : R.L.basis()) nl_gens.push_back(vec_scale(R.N, w));
    std::vector<std::vector<Int>> orbits = Q.orbits(nl_gens, image);

    const int s = R.s;
    std::vector<Solution> out;
    std::vector<int> assign(orbits.size(), 0);
    for (;;) {
        Solution sol;
        sol.positions.resize(static_cast<size_t>(s));
        for (size_t o = 0; o < orbits.size(); ++o)
            for (Int c : orbits[o])
                sol.positions[static_cast<size_t>(assign[o])].push_back(c);
        for (auto& p : sol.positions) std::sort(p.begin(), p.end());
        out.push_back(std::move(sol));
        size_t i = 0;
        while (i < assign.size() && ++assign[i] == s) assign[i++] = 0;
        if (i == assign.size()) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace tilered
