#include <zetareg/quadrature.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <vector>

namespace zetareg {

namespace {

// Gauss-Kronrod 7/15 nodes and weights on [-1, 1] (positive half; the rule
// is symmetric). Even indices of xgk are the Gauss-7 nodes.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

struct Panel {
    double a, b;
    Complex value;
    double err;
    double resabs;
};

struct PanelOrder {
    bool operator()(const Panel& x, const Panel& y) const { return x.err < y.err; }
};

Panel eval_panel(const std::function<Complex(double)>& f, double a, double b, int& evals) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    Complex fc = f(c);
    Complex kron = kWgk[7] * fc;
    Complex gauss = kWg[3] * fc;
    double resabs = kWgk[7] * std::abs(fc);
    for (int j = 0; j < 7; ++j) {
        Complex f1 = f(c - h * kXgk[j]);
        Complex f2 = f(c + h * kXgk[j]);
        kron += kWgk[j] * (f1 + f2);
        resabs += kWgk[j] * (std::abs(f1) + std::abs(f2));
        if (j % 2 == 1) gauss += kWg[j / 2] * (f1 + f2);
    }
    evals += 15;
    Panel p;
    p.a = a;
    p.b = b;
    p.value = h * kron;
    // QUADPACK-style sharpened estimate, floored by the raw difference and
    // by roundoff on the absolute integral.
    double diff = std::abs(h * (kron - gauss));
    double scale = std::abs(h) * resabs;
    double err = diff;
    if (scale > 0.0 && diff > 0.0) {
        double r = std::pow(200.0 * diff / scale, 1.5);
        if (r < 1.0) err = scale * r;
    }
    err = std::max(err, scale * 5e-16);
    p.err = err;
    p.resabs = scale;
    return p;
}

}  // namespace

QuadResult integrate_gk(const std::function<Complex(double)>& f, double a, double b,
                        double abs_tol, int max_panels) {
    return integrate_gk_segments(f, {{a, b}}, abs_tol, max_panels);
}

QuadResult integrate_gk_segments(const std::function<Complex(double)>& f,
                                 const std::vector<std::pair<double, double>>& segments,
                                 double abs_tol, int max_panels) {
    QuadResult out;
    std::priority_queue<Panel, std::vector<Panel>, PanelOrder> queue;
    std::vector<Panel> done;  // panels at the roundoff floor; splitting cannot help
    double queue_err = 0.0, done_err = 0.0;
    auto push = [&](Panel&& p) {
        double floor = std::max(p.resabs * 5.5e-16, 1e-305);
        double m = 0.5 * (p.a + p.b);
        if (p.err <= floor || !(m > p.a && m < p.b)) {
            done_err += p.err;
            done.push_back(std::move(p));
        } else {
            queue_err += p.err;
            queue.push(std::move(p));
        }
    };
    for (auto [a, b] : segments) {
        if (!(b > a)) continue;
        push(eval_panel(f, a, b, out.evals));
    }
    int panels = static_cast<int>(queue.size() + done.size());
    // Refine while above target and the remaining error is not dominated by
    // the roundoff floor of already-converged panels (which no amount of
    // splitting can reduce).
    while (queue_err + done_err > abs_tol && queue_err > 0.05 * done_err &&
           panels < max_panels && !queue.empty()) {
        Panel worst = queue.top();
        queue.pop();
        queue_err -= worst.err;
        double m = 0.5 * (worst.a + worst.b);
        push(eval_panel(f, worst.a, m, out.evals));
        push(eval_panel(f, m, worst.b, out.evals));
        ++panels;
    }
    if (panels >= max_panels && queue_err + done_err > 10.0 * std::max(abs_tol, done_err))
        throw QuadratureFailure("integrate_gk: panel limit reached before tolerance");
    // Deterministic reduction: sum panels sorted by position.
    std::vector<Panel> all = std::move(done);
    all.reserve(all.size() + queue.size());
    while (!queue.empty()) {
        all.push_back(queue.top());
        queue.pop();
    }
    std::sort(all.begin(), all.end(), [](const Panel& x, const Panel& y) { return x.a < y.a; });
    Complex sum = 0.0;
    double err = 0.0, resabs = 0.0;
    for (const Panel& p : all) {
        sum += p.value;
        err += p.err;
        resabs += p.resabs;
    }
    out.value = sum;
    out.abs_err = err;
    out.abs_integral = resabs;
    out.panels = panels;
    return out;
}

}  // namespace zetareg
