/**************************************************************************
 * qspa.cpp
 *
 * Copyright 2026 The ffma Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/

#include "ffma/qspa.hpp"

#include <algorithm>

namespace ffmac {

namespace {

void normalize(Distribution& d)
{
    double s = 0;
    for (double v : d)
        s += v;
    if (s <= 0 || !(s == s)) {
        std::fill(d.begin(), d.end(), 1.0 / static_cast<double>(d.size()));
        return;
    }
    for (double& v : d)
        v /= s;
}

// out(c) = Σ_{a+b=c} x(a)·y(b) over Z_q.
void cyclic_conv(const Distribution& x, const Distribution& y, Distribution& out, std::uint32_t q)
{
    std::fill(out.begin(), out.end(), 0.0);
    for (std::uint32_t a = 0; a < q; ++a) {
        if (x[a] == 0)
            continue;
        for (std::uint32_t b = 0; b < q; ++b) {
            std::uint32_t c = a + b;
            out[c >= q ? c - q : c] += x[a] * y[b];
        }
    }
}

} // namespace

std::uint32_t hard_decision(const Distribution& d, bool* tied)
{
    std::uint32_t best = 0;
    for (std::uint32_t a = 1; a < d.size(); ++a)
        if (d[a] > d[best])
            best = a;
    if (tied) {
        *tied = false;
        for (std::uint32_t a = 0; a < d.size(); ++a)
            if (a != best && d[a] >= d[best] * (1.0 - 1e-9))
                *tied = true;
    }
    return best;
}

QspaDecoder::QspaDecoder(const FieldMatrix& h)
    : field_(h.field()), q_(h.field().p()), n_(h.cols()), check_edges_(h.rows()),
      var_edges_(h.cols())
{
    for (std::size_t r = 0; r < h.rows(); ++r)
        for (std::size_t c = 0; c < h.cols(); ++c)
            if (auto v = h.at(r, c)) {
                check_edges_[r].push_back(edges_.size());
                var_edges_[c].push_back(edges_.size());
                edges_.push_back({r, c, v});
            }
}

bool QspaDecoder::syndrome_zero(const std::vector<std::uint32_t>& x) const
{
    for (const auto& ce : check_edges_) {
        std::uint32_t s = 0;
        for (auto e : ce)
            s = field_.add(s, field_.mul(edges_[e].coef, x[edges_[e].var]));
        if (s)
            return false;
    }
    return true;
}

QspaResult QspaDecoder::decode(const std::vector<Distribution>& priors_in,
                               const QspaOptions& opt) const
{
    if (priors_in.size() != n_)
        throw DimensionError("prior count " + std::to_string(priors_in.size()) +
                             " differs from code length " + std::to_string(n_));
    std::vector<Distribution> priors = priors_in;
    for (auto& p : priors) {
        if (p.size() != q_)
            throw DimensionError("prior alphabet size differs from field order");
        normalize(p);
    }

    QspaResult res;
    res.posteriors = priors;
    res.codeword.resize(n_);

    auto decide = [&] {
        bool any_tie = false;
        for (std::size_t v = 0; v < n_; ++v) {
            bool tied = false;
            res.codeword[v] = hard_decision(res.posteriors[v], &tied);
            any_tie |= tied;
        }
        return !any_tie && syndrome_zero(res.codeword);
    };
    if (decide()) {
        res.converged = true;
        return res;
    }

    const std::size_t E = edges_.size();
    std::vector<Distribution> v2c(E), c2v(E, Distribution(q_, 1.0 / q_));
    for (std::size_t e = 0; e < E; ++e)
        v2c[e] = priors[edges_[e].var];

    std::vector<Distribution> fwd, bwd;
    Distribution ext(q_), msg(q_);

    for (std::size_t it = 1; it <= opt.max_iters; ++it) {
        // Check nodes: distribution of -Σ_{others} h·x, mapped back through h^{-1}.
        for (const auto& ce : check_edges_) {
            const std::size_t d = ce.size();
            fwd.assign(d + 1, Distribution(q_, 0.0));
            bwd.assign(d + 1, Distribution(q_, 0.0));
            fwd[0][0] = 1.0;
            bwd[d][0] = 1.0;
            std::vector<Distribution> ys(d, Distribution(q_, 0.0));
            for (std::size_t k = 0; k < d; ++k) {
                const auto& ed = edges_[ce[k]];
                for (std::uint32_t a = 0; a < q_; ++a)
                    ys[k][field_.mul(ed.coef, a)] = v2c[ce[k]][a];
            }
            for (std::size_t k = 0; k < d; ++k) {
                cyclic_conv(fwd[k], ys[k], fwd[k + 1], q_);
                normalize(fwd[k + 1]);
            }
            for (std::size_t k = d; k-- > 0;) {
                cyclic_conv(bwd[k + 1], ys[k], bwd[k], q_);
                normalize(bwd[k]);
            }
            for (std::size_t k = 0; k < d; ++k) {
                cyclic_conv(fwd[k], bwd[k + 1], ext, q_);
                const std::size_t e = ce[k];
                const auto& ed = edges_[e];
                // h·x_e = -s  ⇒  P(x_e = a) = ext(-h·a)
                for (std::uint32_t a = 0; a < q_; ++a)
                    msg[a] = ext[field_.neg(field_.mul(ed.coef, a))];
                normalize(msg);
                if (opt.damping > 0)
                    for (std::uint32_t a = 0; a < q_; ++a)
                        msg[a] = (1 - opt.damping) * msg[a] + opt.damping * c2v[e][a];
                c2v[e] = msg;
            }
        }
        // Variable nodes.
        for (std::size_t v = 0; v < n_; ++v) {
            const auto& ve = var_edges_[v];
            Distribution post = priors[v];
            for (auto e : ve)
                for (std::uint32_t a = 0; a < q_; ++a)
                    post[a] *= c2v[e][a];
            normalize(post);
            res.posteriors[v] = post;
            for (auto e : ve) {
                Distribution out = priors[v];
                for (auto e2 : ve)
                    if (e2 != e)
                        for (std::uint32_t a = 0; a < q_; ++a)
                            out[a] *= c2v[e2][a];
                normalize(out);
                v2c[e] = std::move(out);
            }
        }
        res.iterations = it;
        if (decide()) {
            res.converged = true;
            break;
        }
    }
    return res;
}

} // namespace ffmac
