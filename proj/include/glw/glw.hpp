#pragma once

// Convenience header pulling in the whole library.

#include "glw/acceptance_game.hpp"
#include "glw/arena_json.hpp"
#include "glw/compile.hpp"
#include "glw/equiv.hpp"
#include "glw/eval_game.hpp"
#include "glw/extract.hpp"
#include "glw/family.hpp"
#include "glw/fixpoint_terms.hpp"
#include "glw/glg_check.hpp"
#include "glw/graph_json.hpp"
#include "glw/io_common.hpp"
#include "glw/model.hpp"
#include "glw/model_json.hpp"
#include "glw/normal_form.hpp"
#include "glw/parity.hpp"
#include "glw/parse.hpp"
#include "glw/random_model.hpp"
#include "glw/render.hpp"
#include "glw/term.hpp"
