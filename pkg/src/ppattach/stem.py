"""A small rule-based English verb stemmer.

Strips -ing, -ed and -s/-es, undoing consonant doubling and restoring a
final e where the remaining stem looks like it lost one. A short table
covers common irregular forms. The stemmer is applied repeatedly until the
word stops changing, so ``stem_verb(stem_verb(w)) == stem_verb(w)`` always
holds.

Only tokens made of lowercase ASCII letters (and hyphens) are touched.
"""

from __future__ import annotations

import re
from typing import Callable, Dict

Stemmer = Callable[[str], str]

_WORD = re.compile(r"[a-z]+(?:-[a-z]+)*\Z")
_VOWELS = set("aeiou")

# forms of "be" are left alone so copular quadruples keep their surface verb
IRREGULAR = {
    "has": "have", "had": "have", "having": "have",
    "does": "do", "did": "do", "done": "do", "doing": "do",
    "goes": "go", "went": "go", "gone": "go",
    "made": "make", "took": "take", "taken": "take",
    "got": "get", "gotten": "get", "gave": "give", "given": "give",
    "said": "say", "says": "say", "paid": "pay", "laid": "lay",
    "sold": "sell", "told": "tell", "held": "hold",
    "bought": "buy", "brought": "bring", "thought": "think",
    "sought": "seek", "fought": "fight", "caught": "catch", "taught": "teach",
    "found": "find", "left": "leave", "kept": "keep", "felt": "feel",
    "meant": "mean", "sent": "send", "spent": "spend", "lent": "lend",
    "built": "build", "lost": "lose", "led": "lead", "fed": "feed",
    "met": "meet", "ran": "run", "came": "come", "became": "become",
    "began": "begin", "begun": "begin", "saw": "see", "seen": "see",
    "knew": "know", "known": "know", "grew": "grow", "grown": "grow",
    "threw": "throw", "thrown": "throw", "drew": "draw", "drawn": "draw",
    "flew": "fly", "flown": "fly", "wrote": "write", "written": "write",
    "rose": "rise", "risen": "rise", "fell": "fall", "fallen": "fall",
    "won": "win", "stood": "stand", "understood": "understand",
    "struck": "strike", "chose": "choose", "chosen": "choose",
    "ate": "eat", "eaten": "eat", "drove": "drive", "driven": "drive",
    "broke": "break", "broken": "break", "spoke": "speak", "spoken": "speak",
    "wore": "wear", "worn": "wear", "bore": "bear", "borne": "bear",
    "hung": "hang", "dug": "dig", "stuck": "stick", "shot": "shoot",
    "slid": "slide", "hid": "hide", "hidden": "hide", "bid": "bid",
    "dies": "die", "died": "die", "dying": "die",
    "lies": "lie", "lied": "lie", "lying": "lie",
    "ties": "tie", "tied": "tie", "tying": "tie",
    "uses": "use", "used": "use", "using": "use",
    "added": "add", "adding": "add", "adds": "add",
    "agreed": "agree", "agrees": "agree", "agreeing": "agree",
    "disagreed": "disagree", "guaranteed": "guarantee", "freed": "free",
    "controlled": "control", "controlling": "control",
    "refused": "refuse", "accused": "accuse",
    "hanging": "hang", "hanged": "hang",
}

# base forms that end like inflections and must not be stripped
_KEEP = {"need", "feed", "seed", "speed", "proceed", "succeed", "exceed",
         "bring", "sing", "ring", "string", "spring", "swing", "cling",
         "bless", "pass", "miss", "press", "focus", "bias", "bus"}


def _has_vowel(s: str) -> bool:
    return bool(re.search(r"[aeiou]", s) or re.search(r"y", s[1:]))


def _syllables(s: str) -> int:
    return len(re.findall(r"[aeiouy]+", s))


def _is_cvc(s: str) -> bool:
    if len(s) < 3:
        return False
    c1, v, c2 = s[-3:]
    return (c1 not in _VOWELS and v in _VOWELS
            and c2 not in _VOWELS and c2 not in "wxy")


def _restore(base: str) -> str:
    """Repair a stem left after removing -ing or -ed."""
    if len(base) >= 3 and base[-1] == base[-2] and base[-1] not in _VOWELS | set("lsz"):
        return base[:-1]
    if base.endswith(("at", "bl", "iz", "rg", "dg", "ang", "c", "v", "u", "z")):
        return base + "e"
    if base[-1] == "s" and base[-2] in _VOWELS and not base.endswith("us"):
        return base + "e"
    if base.endswith(("aus", "uir")):
        return base + "e"
    if _is_cvc(base):
        if _syllables(base) == 1:
            return base + "e"
        # provid-, assum-, requir-, manag-
        if base[-1] in "dgkmz" or (base[-1] == "r" and base[-2] != "e"):
            return base + "e"
    return base


def _step(w: str) -> str:
    if w in IRREGULAR:
        return IRREGULAR[w]
    if w in _KEEP:
        return w
    if w.endswith("ing"):
        base = w[:-3]
        if len(base) >= 2 and _has_vowel(base):
            return _restore(base)
        return w
    if w.endswith("ied"):
        return w[:-1] if len(w) <= 4 else w[:-3] + "y"
    if w.endswith("eed"):
        return w
    if w.endswith("ed"):
        base = w[:-2]
        if len(base) >= 2 and _has_vowel(base):
            return _restore(base)
        return w
    if w.endswith("ies"):
        return w[:-1] if len(w) <= 4 else w[:-3] + "y"
    if w.endswith(("sses", "shes", "ches", "xes", "zzes", "oes")):
        return w[:-2]
    if w.endswith("s") and len(w) > 3 and not w.endswith(("ss", "us", "is", "as")):
        return w[:-1]
    return w


def stem_verb(word: str) -> str:
    """Reduce an inflected English verb to its stem.

    >>> stem_verb("joined"), stem_verb("making"), stem_verb("said")
    ('join', 'make', 'say')
    """
    if not _WORD.match(word):
        return word
    head, sep, last = word.rpartition("-")
    prev = None
    while last != prev:
        prev, last = last, _step(last)
    return head + sep + last


def identity(word: str) -> str:
    return word


STEMMERS: Dict[str, Stemmer] = {"rules": stem_verb, "none": identity}


def register_stemmer(name: str, fn: Stemmer) -> None:
    """Make a stemmer selectable by name (e.g. from the command line).

    The function should be idempotent for normalization to stay idempotent.
    """
    STEMMERS[name] = fn


def get_stemmer(name: str) -> Stemmer:
    try:
        return STEMMERS[name]
    except KeyError:
        raise ValueError(f"unknown stemmer {name!r}; choose from {sorted(STEMMERS)}") from None
