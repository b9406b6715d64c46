"""Writes prompts/appendix_{1..4}.txt: the rewrite prompt rendered for the four
worked-example dictionaries, as the golden files for prompt assembly.

The template is converted here from its LaTeX source by plain text rules, and
each dictionary string is Python's own str() of the list of dicts, so neither
side shares code with the C++ renderer.
"""
import pathlib
import re

HERE = pathlib.Path(__file__).resolve().parent

LATEX_SOURCE = r"""You are a linguistics expert specialising in the nuances of Singaporean English. Rewrite the message in \texttt{<TARGET>} in everyday Singaporean English. The messages are currently from a western society and are slightly awkward to hear in Singapore. Most Singaporeans speak fluent, standard English, with light Singlish touches here and there. Not broken grammar everywhere. A dictionary is provided to give you possibilities for words to replace with Singlish variants.  

Rules:
\begin{itemize}
\item You need not use any of the words from the dictionary, but you may use one of them if it fits the context.
\item Absolutely never use any discourse particles such as but not limited to la, lor, leh.
\item Replace at most ONE word with a Singlish variant for each sentence even if multiple dictionary matches are present.
\item Keep all other parts of the message exactly the same.
\item If no suitable match is found, return the original message unchanged.
\item You must preserve the message's meaning.
\item Return ONLY the rewritten message --- do not explain or add anything else.
\end{itemize}

Examples:

Dictionary: \texttt{[{{'token': 'behavior', 'word': 'pattern', 'label': 'noun','meaning': 'troublesome or annoying actions'}}, {{'token': 'driving', 'word': 'chiong', 'meaning': 'to charge; to rush forward; to make a dash for'}}]}

\texttt{<TARGET>}His behavior is driving everyone mad.\texttt{</TARGET>}\\
Rewritten: His pattern is driving everyone mad.

Dictionary: \texttt{[{{'token': 'mind', 'word': 'eye power', 'label': 'noun','meaning': 'just watching and not helping'}}]}

\texttt{<TARGET>}If there's anything on your mind, just say it.\texttt{</TARGET>}\\
Rewritten: If there's anything on your mind, just say it.

Dictionary: \texttt{[{{'token': 'must', 'word': 'die die', 'label': 'adverb', 'meaning': 'absolutely; no matter what; even at the cost of one's life'}},{{'token': 'amazing','word': 'power','meaning': 'used to express amazement, praise, etc. at something impressive or outstanding'}}]}

\texttt{<TARGET>}You must try this dish, it's amazing!\texttt{</TARGET>}\\
Rewritten: You die die must try this dish, it's amazing!

Dictionary: \texttt{[{{'token': 'act blur', 'word': 'pretend', 'label': 'verb', 'meaning': 'to feign ignorance; to play dumb'}}, {{'token': 'pretend', 'word': 'act chio', 'meaning': 'to behave in an (often exaggeratedly) charming or vain manner; to act pretty; to pretend as if one is extremely beautiful'}}]}

\texttt{<TARGET>} Don't pretend you don't know anything about the situation.\texttt{</TARGET>}\\
Rewritten: Don't act blur that you don't know anything about the situation.

Please complete the following:

Dictionary: \texttt{{dict\_str}}\\
\texttt{<TARGET>}{sentence}\texttt{</TARGET>}\\
Rewritten:
"""


def latex_to_text(src):
    lines = []
    for line in src.split("\n"):
        if line.strip() in (r"\begin{itemize}", r"\end{itemize}"):
            continue
        if line.startswith(r"\item "):
            line = "- " + line[len(r"\item "):]
        line = re.sub(r"\\texttt\{(<TARGET>|</TARGET>)\}", r"\1", line)
        if line.endswith("\\\\"):
            line = line[:-2]
        if line.startswith(r"Dictionary: \texttt{") and line.endswith("}"):
            line = "Dictionary: " + line[len(r"Dictionary: \texttt{"):-1]
        line = line.replace("{{", "{").replace("}}", "}").replace(r"\_", "_").replace("---", "\u2014")
        lines.append(line.rstrip())
    return "\n".join(lines).rstrip("\n")


TEMPLATE = latex_to_text(LATEX_SOURCE)
assert TEMPLATE.count("{dict_str}") == 1 and TEMPLATE.count("{sentence}") == 1

# Worked-example dictionaries, key order token, word, label, meaning.
CASES = [
    (
        [
            {"token": "behavior", "word": "pattern", "label": "noun", "meaning": "troublesome or annoying actions"},
            {"token": "driving", "word": "chiong", "meaning": "to charge; to rush forward; to make a dash for"},
        ],
        "His behavior is driving everyone mad.",
    ),
    (
        [{"token": "mind", "word": "eye power", "label": "noun", "meaning": "just watching and not helping"}],
        "If there's anything on your mind, just say it.",
    ),
    (
        [
            {"token": "must", "word": "die die", "label": "adverb",
             "meaning": "absolutely; no matter what; even at the cost of one's life"},
            {"token": "amazing", "word": "power",
             "meaning": "used to express amazement, praise, etc. at something impressive or outstanding"},
        ],
        "You must try this dish, it's amazing!",
    ),
    (
        [
            {"token": "act blur", "word": "pretend", "label": "verb", "meaning": "to feign ignorance; to play dumb"},
            {"token": "pretend", "word": "act chio",
             "meaning": "to behave in an (often exaggeratedly) charming or vain manner; to act pretty; "
                        "to pretend as if one is extremely beautiful"},
        ],
        " Don't pretend you don't know anything about the situation.",
    ),
]

# The targets must be the ones shown in the examples block.
for _, target in CASES:
    assert "<TARGET>" + target + "</TARGET>" in TEMPLATE, target

for i, (dictionary, target) in enumerate(CASES, 1):
    prompt = TEMPLATE.replace("{dict_str}", str(dictionary)).replace("{sentence}", target)
    (HERE / "prompts" / f"appendix_{i}.txt").write_text(prompt, encoding="utf-8", newline="\n")
(HERE / "prompts" / "template.txt").write_text(TEMPLATE, encoding="utf-8", newline="\n")
