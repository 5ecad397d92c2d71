#include "reflect96/context.hpp"

#include "reflect96/refdata.hpp"

namespace reflect96 {

Context Context::build(std::size_t max_closure) {
  Context ctx;
  ctx.group =
      generate_group({refdata::generator_T(), refdata::generator_D()}, max_closure);
  ctx.classes = align_classes(ctx.group, conjugacy_classes(ctx.group),
                              refdata::class_words(), refdata::generator_letters());
  ctx.irreps = IrrepBuilder(ctx.group, ctx.classes).build_all();
  ctx.table = build_table(ctx.irreps, ctx.group, ctx.classes);
  return ctx;
}

}  // namespace reflect96
