#include "film/slicing.hpp"

namespace film {

std::vector<double> find_transitions(const std::function<int(double)>& sig, double a,
                                     double b, int scan, double tol) {
    std::vector<double> pts;
    pts.push_back(a);
    double prev_t = a;
    int prev_s = sig(a);
    for (int i = 1; i <= scan; ++i) {
        double t = a + (b - a) * i / scan;
        int s = sig(t);
        if (s != prev_s) {
            double lo = prev_t, hi = t;
            int slo = prev_s;
            while (hi - lo > tol) {
                double m = 0.5 * (lo + hi);
                if (sig(m) == slo) lo = m;
                else hi = m;
            }
            pts.push_back(0.5 * (lo + hi));
        }
        prev_t = t;
        prev_s = s;
    }
    pts.push_back(b);
    return pts;
}

double piecewise_integral(const std::function<double(double)>& f,
                          const std::function<int(double)>& sig,
                          const std::function<bool(int)>& keep, double a, double b,
                          int scan, double rel_tol) {
    if (b <= a) return 0.0;
    auto pts = find_transitions(sig, a, b, scan);
    double total = 0;
    for (size_t i = 0; i + 1 < pts.size(); ++i) {
        double lo = pts[i], hi = pts[i + 1];
        if (hi - lo <= 0) continue;
        if (!keep(sig(0.5 * (lo + hi)))) continue;
        total += adaptive_1d(f, lo, hi, rel_tol);
    }
    return total;
}

} // namespace film
