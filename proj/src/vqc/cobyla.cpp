// Copyright 2026 The pqcopt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pqcopt/vqc/cobyla.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace pqcopt {

namespace {

using Vec = std::vector<double>;
using Mat = std::vector<Vec>;

// Simplex-acceptability and step constants from Powell's code.
constexpr double kAlpha = 0.25; // min vertex-to-face distance, in units of rho
constexpr double kBeta = 2.1;   // max edge length from the base
constexpr double kGamma = 0.5;  // length of a geometry step
constexpr double kDelta = 1.1;  // edge length that forces a vertex out

// Inverse of the matrix whose columns are `cols`; false if singular.
bool invert_columns(const Mat &cols, Mat &inv) {
    const std::size_t d = cols.size();
    Mat a(d, Vec(2 * d, 0.0));
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            a[i][j] = cols[j][i];
        }
        a[i][d + i] = 1.0;
    }
    for (std::size_t c = 0; c < d; ++c) {
        std::size_t piv = c;
        for (std::size_t r = c + 1; r < d; ++r) {
            if (std::abs(a[r][c]) > std::abs(a[piv][c])) {
                piv = r;
            }
        }
        if (std::abs(a[piv][c]) < 1e-300) {
            return false;
        }
        std::swap(a[c], a[piv]);
        const double p = a[c][c];
        for (double &v : a[c]) {
            v /= p;
        }
        for (std::size_t r = 0; r < d; ++r) {
            if (r != c && a[r][c] != 0.0) {
                const double m = a[r][c];
                for (std::size_t k = 0; k < 2 * d; ++k) {
                    a[r][k] -= m * a[c][k];
                }
            }
        }
    }
    inv.assign(d, Vec(d));
    for (std::size_t i = 0; i < d; ++i) {
        std::copy(a[i].begin() + static_cast<long>(d), a[i].end(), inv[i].begin());
    }
    return true;
}

double dot(const Vec &a, const Vec &b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += a[i] * b[i];
    }
    return s;
}

struct Budget {};

class Minimizer {
  public:
    Minimizer(const Objective &f, Vec x0, const CobylaOptions &o)
        : f_(f), opts_(o), d_(x0.size()), best_x_(x0) {
        base_ = std::move(x0);
    }

    CobylaResult run() {
        try {
            minimize();
        } catch (const Budget &) {
        }
        return CobylaResult{best_x_, best_f_, evals_};
    }

  private:
    double eval(const Vec &x) {
        if (evals_ >= opts_.max_evals) {
            throw Budget{};
        }
        ++evals_;
        const double v = f_(x);
        if (!std::isfinite(v)) {
            throw std::domain_error("cobyla: objective returned a non-finite value");
        }
        if (v < best_f_) {
            best_f_ = v;
            best_x_ = x;
        }
        return v;
    }

    void build_simplex() {
        verts_.assign(d_, Vec{});
        fv_.assign(d_, 0.0);
        for (std::size_t j = 0; j < d_; ++j) {
            Vec x = base_;
            x[j] += rho_;
            verts_[j] = x;
            fv_[j] = eval(x);
            if (fv_[j] < fbase_) {
                std::swap(verts_[j], base_);
                std::swap(fv_[j], fbase_);
            }
        }
    }

    void minimize() {
        rho_ = opts_.rhobeg;
        fbase_ = eval(base_);
        build_simplex();
        bool after_geometry_step = false;

        for (;;) {
            // Best vertex becomes the base.
            std::size_t jbest = d_;
            double fmin = fbase_;
            for (std::size_t j = 0; j < d_; ++j) {
                if (fv_[j] < fmin) {
                    fmin = fv_[j];
                    jbest = j;
                }
            }
            if (jbest < d_) {
                std::swap(verts_[jbest], base_);
                std::swap(fv_[jbest], fbase_);
            }

            Mat sim(d_, Vec(d_));
            for (std::size_t j = 0; j < d_; ++j) {
                for (std::size_t i = 0; i < d_; ++i) {
                    sim[j][i] = verts_[j][i] - base_[i];
                }
            }
            Mat simi;
            if (!invert_columns(sim, simi)) {
                // Degenerate simplex: rebuild it around the base.
                build_simplex();
                continue;
            }

            Vec g(d_, 0.0);
            for (std::size_t j = 0; j < d_; ++j) {
                const double df = fv_[j] - fbase_;
                for (std::size_t i = 0; i < d_; ++i) {
                    g[i] += simi[j][i] * df;
                }
            }

            Vec vsig(d_), veta(d_);
            const double parsig = kAlpha * rho_;
            const double pareta = kBeta * rho_;
            bool acceptable = true;
            for (std::size_t j = 0; j < d_; ++j) {
                vsig[j] = 1.0 / std::sqrt(dot(simi[j], simi[j]));
                veta[j] = std::sqrt(dot(sim[j], sim[j]));
                if (vsig[j] < parsig || veta[j] > pareta) {
                    acceptable = false;
                }
            }

            if (!acceptable && !after_geometry_step) {
                // Pull the worst vertex back into a well-shaped simplex.
                std::size_t jdrop = d_;
                double worst = pareta;
                for (std::size_t j = 0; j < d_; ++j) {
                    if (veta[j] > worst) {
                        jdrop = j;
                        worst = veta[j];
                    }
                }
                if (jdrop == d_) {
                    double thin = parsig;
                    for (std::size_t j = 0; j < d_; ++j) {
                        if (vsig[j] < thin) {
                            jdrop = j;
                            thin = vsig[j];
                        }
                    }
                }
                Vec dx(d_);
                for (std::size_t i = 0; i < d_; ++i) {
                    dx[i] = kGamma * rho_ * vsig[jdrop] * simi[jdrop][i];
                }
                if (dot(g, dx) > 0.0) {
                    for (double &v : dx) {
                        v = -v;
                    }
                }
                Vec x = base_;
                for (std::size_t i = 0; i < d_; ++i) {
                    x[i] += dx[i];
                }
                fv_[jdrop] = eval(x);
                verts_[jdrop] = std::move(x);
                after_geometry_step = true;
                continue;
            }
            after_geometry_step = false;

            const double gnorm = std::sqrt(dot(g, g));
            bool keep_rho = false;
            if (gnorm > 0.0) {
                Vec dx(d_);
                for (std::size_t i = 0; i < d_; ++i) {
                    dx[i] = -rho_ * g[i] / gnorm;
                }
                Vec x = base_;
                for (std::size_t i = 0; i < d_; ++i) {
                    x[i] += dx[i];
                }
                const double fnew = eval(x);
                const double predicted = rho_ * gnorm;
                const double actual = fbase_ - fnew;

                // Vertex to replace with the new point, if any.
                std::size_t jdrop = d_;
                double ratio = actual <= 0.0 ? 1.0 : 0.0;
                Vec sigbar(d_);
                for (std::size_t j = 0; j < d_; ++j) {
                    const double c = std::abs(dot(simi[j], dx));
                    if (c > ratio) {
                        jdrop = j;
                        ratio = c;
                    }
                    sigbar[j] = c * vsig[j];
                }
                double edgmax = kDelta * rho_;
                for (std::size_t j = 0; j < d_; ++j) {
                    if (sigbar[j] >= parsig || sigbar[j] >= vsig[j]) {
                        double len = veta[j];
                        if (actual > 0.0) {
                            double s = 0.0;
                            for (std::size_t i = 0; i < d_; ++i) {
                                s += (dx[i] - sim[j][i]) * (dx[i] - sim[j][i]);
                            }
                            len = std::sqrt(s);
                        }
                        if (len > edgmax) {
                            jdrop = j;
                            edgmax = len;
                        }
                    }
                }
                if (jdrop < d_) {
                    verts_[jdrop] = std::move(x);
                    fv_[jdrop] = fnew;
                    keep_rho = actual > 0.0 && actual >= 0.1 * predicted;
                }
            }
            if (keep_rho) {
                continue;
            }
            if (!acceptable) {
                continue;
            }
            if (rho_ <= opts_.rhoend) {
                return;
            }
            rho_ *= 0.5;
            if (rho_ <= 1.5 * opts_.rhoend) {
                rho_ = opts_.rhoend;
            }
        }
    }

    const Objective &f_;
    CobylaOptions opts_;
    std::size_t d_;
    Vec base_;
    double fbase_ = 0.0;
    std::vector<Vec> verts_;
    Vec fv_;
    double rho_ = 0.0;
    int evals_ = 0;
    Vec best_x_;
    double best_f_ = std::numeric_limits<double>::infinity();
};

} // namespace

CobylaResult cobyla_minimize(const Objective &f, std::vector<double> x0, const CobylaOptions &opts) {
    if (x0.empty()) {
        throw std::invalid_argument("cobyla: need at least one variable");
    }
    if (opts.max_evals < static_cast<int>(x0.size()) + 2) {
        throw std::invalid_argument("cobyla: max_evals must be at least d + 2");
    }
    if (!(opts.rhobeg > 0.0) || !(opts.rhoend > 0.0) || opts.rhoend > opts.rhobeg) {
        throw std::invalid_argument("cobyla: need 0 < rhoend <= rhobeg");
    }
    return Minimizer(f, std::move(x0), opts).run();
}

} // namespace pqcopt
