// Copyright 2026 The tlsum Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TLSUM_TLSUM_H_
#define TLSUM_TLSUM_H_

#include "tlsum/baselines.h"
#include "tlsum/common.h"
#include "tlsum/constraints.h"
#include "tlsum/corpus.h"
#include "tlsum/date.h"
#include "tlsum/date_tagger.h"
#include "tlsum/evaluation.h"
#include "tlsum/objectives.h"
#include "tlsum/optimizer.h"
#include "tlsum/pipeline.h"
#include "tlsum/random_instance.h"
#include "tlsum/selftest.h"
#include "tlsum/similarity.h"
#include "tlsum/synthetic.h"
#include "tlsum/tokenizer.h"
#include "tlsum/vectorspace.h"

#endif  // TLSUM_TLSUM_H_
