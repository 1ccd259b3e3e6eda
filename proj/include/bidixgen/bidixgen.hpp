#ifndef BIDIXGEN_BIDIXGEN_HPP
#define BIDIXGEN_BIDIXGEN_HPP

#include "bidixgen/acd.hpp"
#include "bidixgen/cycles.hpp"
#include "bidixgen/dictionary_io.hpp"
#include "bidixgen/error.hpp"
#include "bidixgen/eval.hpp"
#include "bidixgen/inference.hpp"
#include "bidixgen/language_components.hpp"
#include "bidixgen/lexical_entry.hpp"
#include "bidixgen/otic.hpp"
#include "bidixgen/synth.hpp"
#include "bidixgen/translation_graph.hpp"

#endif  // BIDIXGEN_BIDIXGEN_HPP
