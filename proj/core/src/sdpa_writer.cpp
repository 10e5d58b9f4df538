// SPDX-License-Identifier: Apache-2.0
//
// dmaswipt: DMA-aided multiuser MISO power-splitting SWIPT optimization
// Copyright (C) 2026 The dmaswipt authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "sdpa_writer.hpp"

#include "dmaswipt/units.hpp"

namespace dmaswipt::conic::detail {

namespace {

void write_block(std::ostream& out, int mat, int blk, const RMat& a) {
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = i; j < a.cols(); ++j)
      if (a(i, j) != 0.0)
        out << mat << ' ' << blk << ' ' << i + 1 << ' ' << j + 1 << ' '
            << format_double(a(i, j)) << '\n';
}

}  // namespace

void write_sdpa(std::ostream& out, const StandardForm& p) {
  out << "\"dmaswipt conic problem: min <C,X> s.t. <A_i,X> = b_i, X psd\n";
  out << "\"SDPA dual form with F0 = -C, Fi = A_i, c = b; "
         "optimal SDPA objective = -(min <C,X>)\n";
  const int nblocks =
      static_cast<int>(p.psd_orders.size()) + (p.lp_dim > 0 ? 1 : 0);
  out << p.rows << '\n' << nblocks << '\n';
  for (int n : p.psd_orders) out << n << ' ';
  if (p.lp_dim > 0) out << -p.lp_dim;
  out << '\n';
  for (int i = 0; i < p.rows; ++i) out << format_double(p.b(i)) << ' ';
  out << '\n';

  const int lp_block = static_cast<int>(p.psd_orders.size()) + 1;
  for (std::size_t j = 0; j < p.psd_orders.size(); ++j)
    write_block(out, 0, static_cast<int>(j) + 1, -p.c_psd[j]);
  for (int l = 0; l < p.lp_dim; ++l)
    if (p.c_lp(l) != 0.0)
      out << 0 << ' ' << lp_block << ' ' << l + 1 << ' ' << l + 1 << ' '
          << format_double(-p.c_lp(l)) << '\n';
  for (std::size_t j = 0; j < p.psd_orders.size(); ++j)
    for (const auto& t : p.psd_terms[j])
      write_block(out, t.row + 1, static_cast<int>(j) + 1, t.a);
  for (int l = 0; l < p.lp_dim; ++l)
    for (const auto& t : p.lp_terms[l])
      if (t.a != 0.0)
        out << t.row + 1 << ' ' << lp_block << ' ' << l + 1 << ' ' << l + 1
            << ' ' << format_double(t.a) << '\n';
}

}  // namespace dmaswipt::conic::detail
