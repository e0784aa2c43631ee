// Copyright 2026 The shls Authors.
// SPDX-License-Identifier: Apache-2.0

#include "shls/validate.hpp"

#include <set>
#include <sstream>

namespace shls {
namespace {

void check_expr_types(const Expr& e, ElemType want, std::size_t nest_idx,
                      const AffineProgram& p, std::vector<std::string>& out) {
  switch (e.tag) {
    case Expr::Tag::Const:
      if (e.cval_is_float && want == ElemType::I32) {
        std::ostringstream os;
        os << "nest " << nest_idx << ": float literal in i32 statement";
        out.push_back(os.str());
      }
      break;
    case Expr::Tag::Ref: {
      const ArrayInfo* a = p.find_array(e.ref.array);
      if (a && a->type != want) {
        std::ostringstream os;
        os << "nest " << nest_idx << ": read of " << to_string(a->type) << " array '"
           << e.ref.array << "' in " << to_string(want) << " statement";
        out.push_back(os.str());
      }
      break;
    }
    case Expr::Tag::Op:
      if (e.op == OpKind::Exp && want == ElemType::I32) {
        std::ostringstream os;
        os << "nest " << nest_idx << ": exp is only defined for f32";
        out.push_back(os.str());
      }
      for (auto& a : e.args) check_expr_types(a, want, nest_idx, p, out);
      break;
  }
}

}  // namespace

std::vector<std::string> validate(const AffineProgram& p) {
  std::vector<std::string> diags;
  auto diag = [&](const std::string& m) { diags.push_back(m); };

  std::set<std::string> names;
  for (auto& a : p.arrays) {
    if (!names.insert(a.name).second) diag("duplicate array '" + a.name + "'");
    for (auto d : a.dims) {
      if (d <= 0) {
        diag("array '" + a.name + "' has non-positive dimension");
        break;
      }
    }
  }

  // Arrays available for reading as nests are walked in program order.
  std::set<std::string> written;

  for (std::size_t ni = 0; ni < p.nests.size(); ++ni) {
    const LoopNest& nest = p.nests[ni];
    std::ostringstream pre;
    pre << "nest " << ni << ": ";

    std::set<std::string> loop_ids;
    for (auto& l : nest.loops) {
      if (!loop_ids.insert(l.id).second) diag(pre.str() + "duplicate loop id '" + l.id + "'");
      if (l.trip < 1) diag(pre.str() + "loop '" + l.id + "' has trip count < 1");
    }

    std::set<std::string> written_here;
    for (auto& st : nest.body) written_here.insert(st.write.array);

    auto check_ref = [&](const ArrayRef& r, bool is_write) {
      const ArrayInfo* a = p.find_array(r.array);
      if (!a) {
        diag(pre.str() + "reference to undeclared array '" + r.array + "'");
        return;
      }
      if (static_cast<std::int64_t>(r.indices.size()) != a->rank()) {
        std::ostringstream os;
        os << pre.str() << "'" << r.array << "' has rank " << a->rank() << " but "
           << r.indices.size() << " indices given";
        diag(os.str());
      }
      for (auto& ix : r.indices) {
        for (auto& [id, c] : ix.terms) {
          if (!loop_ids.count(id))
            diag(pre.str() + "index of '" + r.array + "' uses unbound loop '" + id + "'");
        }
      }
      for (auto& [id, v] : r.guard.pins) {
        const Loop* l = nest.find_loop(id);
        if (!l) {
          diag(pre.str() + "guard uses unbound loop '" + id + "'");
        } else if (v != l->trip - 1) {
          std::ostringstream os;
          os << pre.str() << "guard pins '" << id << "' to " << v
             << " but only final-iteration pins (== " << l->trip - 1 << ") are supported";
          diag(os.str());
        }
      }
      if (is_write) {
        if (a->io == IoClass::Input)
          diag(pre.str() + "write to input array '" + r.array + "'");
      } else {
        bool ok = a->io == IoClass::Input || written.count(r.array) || written_here.count(r.array);
        if (!ok)
          diag(pre.str() + "read of '" + r.array +
               "' which is neither an input nor written by this or an earlier nest");
      }
    };

    for (auto& st : nest.body) {
      check_ref(st.write, true);
      for (auto& r : st.reads()) check_ref(r, false);
      const ArrayInfo* w = p.find_array(st.write.array);
      if (w) check_expr_types(st.rhs, w->type, ni, p, diags);
    }
    for (auto& w : written_here) written.insert(w);
  }
  return diags;
}

}  // namespace shls
