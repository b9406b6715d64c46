"""Writes data/lexicon/singlish.jsonl (the shipped lexicon) and the 3-entry test lexicon."""
import json
import pathlib

ROOT = pathlib.Path(__file__).resolve().parents[2]

# (word, label or None, meaning, example)
ENTRIES = [
    ("sian", "adjective", "bored; tired; weary; exhausting", "Three hours of meetings, so sian."),
    ("pattern", "noun", "troublesome or annoying actions", "Don't so many pattern, just do the work."),
    ("chiong", None, "to charge; to rush forward; to make a dash for", "We chiong to the MRT station before it closed."),
    ("eye power", "noun", "just watching and not helping", "Everyone moving boxes, he only eye power."),
    ("die die", "adverb", "absolutely; no matter what; even at the cost of one's life", "I die die must finish this tonight."),
    ("power", None, "used to express amazement, praise, etc. at something impressive or outstanding", "Your cooking very power."),
    ("act blur", "verb", "to feign ignorance; to play dumb", "Ask him to help, he act blur."),
    ("act chio", None, "to behave in an (often exaggeratedly) charming or vain manner; to act pretty; to pretend as if one is extremely beautiful", "She always act chio in photos."),
    ("shiok", "adjective", "delicious; great; wonderful; extremely pleasurable", "This chicken rice very shiok."),
    ("kiasu", "adjective", "afraid of losing out; overly competitive; greedy for advantage", "So kiasu, queue two hours for free gift."),
    ("kiasi", "adjective", "afraid of death; overly cautious; timid", "Don't be kiasi, the ride is safe."),
    ("paiseh", "adjective", "embarrassed; shy; sorry; ashamed", "Paiseh, I came late."),
    ("blur", "adjective", "confused; slow to understand; clueless", "I was so blur in class today."),
    ("jialat", "adjective", "terrible; awful; in serious trouble; bad", "The traffic today jialat."),
    ("bo jio", "phrase", "not invited; left out of an outing", "You all went for supper, bo jio!"),
    ("jio", "verb", "to invite; to ask someone along", "Next time jio me for lunch."),
    ("makan", "verb", "to eat; food; meal", "Let's go makan after work."),
    ("lepak", "verb", "to relax; to loaf around; to hang out idly", "We just lepak at the void deck."),
    ("kaypoh", "adjective", "nosy; busybody; meddling", "Don't be so kaypoh about my business."),
    ("chope", "verb", "to reserve; to book a seat; to claim", "Use a tissue packet to chope the table."),
    ("atas", "adjective", "posh; high-class; snobbish; fancy", "This restaurant quite atas."),
    ("bojio", None, "did not invite someone; excluded", "Party also bojio."),
    ("catch no ball", "phrase", "cannot understand; do not get it", "He explained but I catch no ball."),
    ("steady", "adjective", "reliable; cool; dependable; well done", "Steady, you solved it already."),
    ("steady pom pi pi", "phrase", "calm and composed; unruffled; relaxed", "Exam tomorrow but he steady pom pi pi."),
    ("confirm", "adverb", "definitely; certainly; for sure", "He confirm late again."),
    ("can or not", "phrase", "is it possible; can you do it", "Finish by Friday, can or not?"),
    ("buay tahan", "phrase", "cannot tolerate; cannot stand; unbearable", "The heat today buay tahan."),
    ("tahan", "verb", "to endure; to tolerate; to bear", "How you tahan this noise?"),
    ("gabra", "adjective", "flustered; panicky; clumsy; nervous", "He got gabra during the interview."),
    ("kancheong", "adjective", "anxious; nervous; panicky; tense", "Don't be so kancheong, we have time."),
    ("suay", "adjective", "unlucky; unfortunate; cursed", "So suay, missed the bus again."),
    ("ong", "adjective", "lucky; fortunate; prosperous", "This shop very ong, always got customers."),
    ("huat", "verb", "to prosper; to win; to strike it rich", "Huat ah, we won the lucky draw!"),
    ("cheem", "adjective", "profound; deep; complicated; difficult to understand", "This philosophy book too cheem."),
    ("cheapskate", "noun", "stingy person; miser", "Don't be a cheapskate, share the bill."),
    ("kiam siap", "adjective", "stingy; miserly; tight-fisted", "He so kiam siap, never treat anyone."),
    ("sabo", "verb", "to sabotage; to play a trick on; to get someone in trouble", "They sabo me by changing the time."),
    ("siam", "verb", "to avoid; to dodge; to get out of the way", "Siam, the ball coming!"),
    ("pai kia", "noun", "gangster; delinquent; rowdy youth", "He used to be a pai kia in school."),
    ("ah beng", "noun", "loud unrefined young man; lout", "The ah beng played music loudly."),
    ("ah lian", "noun", "loud unrefined young woman", "The ah lian had bright dyed hair."),
    ("ah pek", "noun", "old man; elderly uncle", "The ah pek feeds pigeons every morning."),
    ("ah ma", "noun", "grandmother; old lady", "My ah ma cooks the best soup."),
    ("ah gong", "noun", "grandfather; the government", "My ah gong tells old stories."),
    ("ang moh", "noun", "Caucasian; Westerner; foreigner", "The ang moh tourist tried durian."),
    ("aunty", "noun", "older woman; female stranger; elderly lady", "Aunty, one kopi please."),
    ("uncle", "noun", "older man; male stranger; elderly gentleman", "The uncle at the stall is very friendly."),
    ("kopi", "noun", "coffee", "Let's grab kopi before work."),
    ("teh", "noun", "tea", "One teh tarik, less sweet."),
    ("kopitiam", "noun", "coffee shop; food court", "Meet at the kopitiam downstairs."),
    ("hawker", "noun", "street food vendor; food stall", "The hawker sells great laksa."),
    ("dabao", "verb", "to take away food; takeout; packed meal", "I dabao dinner for you."),
    ("ta pau", "verb", "to pack food to go; takeaway", "Can ta pau one chicken rice?"),
    ("chim", "adjective", "complicated; intellectually difficult", "His speech too chim for me."),
    ("shag", "adjective", "tired; exhausted; worn out; fatigued", "After the run I very shag."),
    ("pengsan", "verb", "to faint; to pass out; to collapse", "So hot I almost pengsan."),
    ("sian dao", "adjective", "extremely bored; fed up", "Waiting in line, sian dao."),
    ("bo liao", "adjective", "bored with nothing to do; silly; pointless", "He so bo liao, counting tiles."),
    ("bo chap", "adjective", "indifferent; uncaring; couldn't care less", "She bo chap about the gossip."),
    ("bo pian", "phrase", "no choice; nothing can be done; unavoidable", "Rain so heavy, bo pian, must wait."),
    ("bo hew", "verb", "to ignore; to pay no attention", "I called him but he bo hew me."),
    ("hiao", "adjective", "vain; flirtatious; showing off", "She very hiao, always posing."),
    ("lan lan", "adverb", "reluctantly; grudgingly; having no choice", "Lan lan also must go to work."),
    ("gostan", "verb", "to reverse; to go backwards; to back up", "Gostan the car a bit."),
    ("stun", "verb", "to be stunned; shocked; dumbfounded", "When I saw the bill I stun."),
    ("agak agak", "adverb", "roughly; approximately; estimate", "Just agak agak the amount of salt."),
    ("alamak", "interjection", "oh no; oh dear; expression of dismay or surprise", "Alamak, I forgot my wallet!"),
    ("walao", "interjection", "expression of shock; disbelief; exasperation", "Walao, so expensive!"),
    ("aiyo", "interjection", "expression of frustration; disappointment; pain", "Aiyo, why you never tell me?"),
    ("wah", "interjection", "wow; expression of amazement", "Wah, your new house so big!"),
    ("sibei", "adverb", "extremely; very", "The food sibei nice."),
    ("damn", "adverb", "very; really; extremely", "The movie damn good."),
    ("abuden", "interjection", "obviously; what else; isn't it clear", "You going to eat? Abuden?"),
    ("swee", "adjective", "beautiful; perfect; nicely done", "Your handwriting very swee."),
    ("chio", "adjective", "pretty; beautiful; attractive", "The new dress very chio."),
    ("geng", "adjective", "capable; skilled; impressive; brilliant", "Wah, you very geng at maths."),
    ("terror", "adjective", "excellent; formidable; terrific; skilful", "He terror at badminton."),
    ("zai", "adjective", "skilful; steady; capable; competent", "The driver very zai."),
    ("lobang", "noun", "opportunity; good deal; connection; tip", "Got any job lobang?"),
    ("kaki", "noun", "friend; buddy; companion; partner", "He is my makan kaki."),
    ("gahmen", "noun", "government; authorities", "The gahmen announced new rules."),
    ("blur like sotong", "phrase", "very confused; clueless", "First day at work, blur like sotong."),
    ("sotong", "noun", "squid; clueless person", "Don't be a sotong."),
    ("kena", "verb", "to get hit; to suffer; to receive something bad", "He kena scolded by the boss."),
    ("kena sai", "phrase", "in trouble; unlucky; landed in a mess", "Kena sai, the project failed."),
    ("tekan", "verb", "to bully; to pressure; to punish; to push hard", "The coach tekan us during training."),
    ("sai kang", "noun", "menial work; thankless chore", "Always give me the sai kang."),
    ("chop chop", "adverb", "quickly; hurry up; fast", "Chop chop, the bus is coming."),
    ("slowly", "adverb", "take your time; gradually", "Slowly eat, no rush."),
    ("lagi", "adverb", "even more; still; additionally", "This one lagi better."),
    ("sikit", "adverb", "a little; a bit; slightly", "Add sikit sugar."),
    ("banyak", "adverb", "very; many; a lot", "Banyak people at the mall today."),
    ("habis", "verb", "finished; over; used up; done", "Habis, no more rice."),
    ("mati", "adjective", "dead; broken; done for", "My phone mati already."),
    ("rabak", "adjective", "messy; chaotic; out of control; disastrous", "The party became rabak."),
    ("sia", "interjection", "expression of emphasis or exasperation", "So tired sia."),
    ("shiok sendiri", "phrase", "self-satisfied; pleased with oneself; smug", "He sings shiok sendiri."),
    ("syok", "adjective", "enjoyable; pleasurable; great; delightful", "Swimming on a hot day very syok."),
    ("heng", "adjective", "lucky; fortunate; close call", "Heng, the train was late too."),
    ("heng ah", "phrase", "phew; thank goodness; relieved", "Heng ah, found my keys."),
    ("simi", "pronoun", "what", "Simi you talking about?"),
    ("simi sai", "phrase", "whatever; anything at all", "He eats simi sai also can."),
    ("hor", "interjection", "right; marker seeking agreement", "You come tomorrow hor."),
    ("kenna", "verb", "to be subjected to; to receive; to get caught", "He kenna fine for speeding."),
    ("chut pattern", "phrase", "to come up with tricks; to make excuses; to be difficult", "Don't chut pattern, just come."),
    ("siao", "adjective", "crazy; mad; insane; ridiculous", "You siao ah, swimming at midnight?"),
    ("gila", "adjective", "crazy; mad; wild", "The crowd went gila."),
    ("bodoh", "adjective", "stupid; foolish; silly", "Don't be bodoh."),
    ("goondu", "noun", "fool; idiot; dimwit", "Only a goondu would believe that."),
    ("sua ku", "noun", "country bumpkin; unsophisticated person", "Don't be sua ku, this is an escalator."),
    ("ulu", "adjective", "remote; isolated; out of the way", "His house very ulu."),
    ("jiak zua", "phrase", "lazy; idle; slacking off at work", "He always jiak zua at the office."),
    ("skive", "verb", "to shirk; to avoid work; to slack", "Stop skiving and help."),
    ("keng", "verb", "to fake illness; to malinger; to pretend to be sick", "He keng to get out of training."),
    ("arrow", "verb", "to assign an unwanted task; to delegate", "Boss arrow me to do the report."),
    ("chao keng", "verb", "to fake illness to avoid duty", "He chao keng again."),
    ("wayang", "noun", "show; pretence; putting on an act for appearances", "All that cleaning just wayang for the boss."),
    ("kelong", "verb", "to cheat; to fix a match; rigged", "The game was kelong."),
    ("pong", "verb", "to smell bad; stink", "The bin pong already."),
    ("buay song", "adjective", "unhappy; dissatisfied; annoyed; upset", "He buay song about the decision."),
    ("song", "adjective", "happy; satisfied; great; pleased", "Wah, got bonus, song!"),
    ("kek sim", "adjective", "frustrated; heartbroken; exasperated", "My son never listen, so kek sim."),
    ("sim tia", "adjective", "heartache; pained; sad", "See the dog injured, sim tia."),
    ("pek chek", "adjective", "frustrated; annoyed; fed up", "Traffic jam again, very pek chek."),
    ("hum ji", "adjective", "cowardly; timid; scared", "Don't be hum ji, just try."),
    ("hosay", "adjective", "good; excellent; great", "Life very hosay now."),
    ("ho liao", "phrase", "good; fine; sorted", "Ho liao, everything settled."),
    ("ho say liao", "phrase", "excellent; all good; perfect", "Ho say liao, we won."),
    ("kopi-o", "noun", "black coffee with sugar", "One kopi-o kosong."),
    ("kosong", "adjective", "empty; zero; without sugar; plain", "Teh kosong please."),
    ("shiok ah", "interjection", "how wonderful; what a delight", "Shiok ah, the aircon so cold."),
    ("jin", "adverb", "very; really", "This bag jin expensive."),
    ("bojio sia", "phrase", "complaint about not being invited", "Went to Sentosa without me, bojio sia."),
    ("talk cock", "phrase", "to talk nonsense; to chat idly; to gossip", "We just talk cock over supper."),
    ("kopi talk", "phrase", "casual chat; small talk over coffee", "Just kopi talk, nothing serious."),
    ("kampung", "noun", "village; countryside; hometown", "He grew up in a kampung."),
    ("kampung spirit", "phrase", "community spirit; neighbourliness", "The neighbours show kampung spirit."),
    ("void deck", "noun", "open ground floor of a housing block", "Meet at the void deck."),
    ("HDB", "noun", "public housing flat; apartment", "They live in a HDB flat."),
    ("MRT", "noun", "subway; train; metro", "Take the MRT to town."),
    ("aircon", "noun", "air conditioner; air conditioning", "Turn on the aircon."),
    ("handphone", "noun", "mobile phone; cellphone", "Charge your handphone."),
    ("outstation", "adjective", "away on a trip; travelling for work", "He outstation this week."),
    ("on", "verb", "to agree; to be in; to accept", "Movie tonight? On!"),
    ("off", "verb", "to switch off; to turn off", "Off the lights before you go."),
    ("open", "verb", "to turn on; to switch on", "Open the fan please."),
    ("spoil", "verb", "broken; not working; out of order", "The lift spoil again."),
    ("send", "verb", "to bring someone; to drop off; to accompany", "I send you home."),
    ("fetch", "verb", "to pick up; to give a ride", "Can fetch me from school?"),
    ("revert", "verb", "to reply; to get back; to respond", "Please revert by Monday."),
    ("last time", "adverb", "in the past; previously; formerly", "Last time this area was a swamp."),
    ("next time", "adverb", "in the future; later on; eventually", "Next time I want to be a pilot."),
    ("already", "adverb", "now; completed; already done", "I eat already."),
    ("one", "particle", "emphatic ending marking a characteristic", "He like that one."),
    ("got", "verb", "there is; have; has", "Got people here?"),
    ("izzit", "phrase", "is it; really; is that so", "You going, izzit?"),
    ("liddat", "adverb", "like that; in that way; so", "Why you liddat?"),
    ("den", "adverb", "then; so; that's why", "Den how?"),
    ("nia", "adverb", "only; just; merely", "Five dollars nia."),
    ("nah", "interjection", "here, take it", "Nah, your book."),
    ("shuai", "adjective", "handsome; cool; good-looking", "He very shuai today."),
    ("chou", "adjective", "smelly; stinky; foul", "The drain very chou."),
    ("ah huay", "noun", "sweet young girl; lass", "The ah huay at the counter smiled."),
    ("leh cheh", "adjective", "fussy; troublesome; long-winded", "The process very leh cheh."),
    ("lecturer", "noun", "university teacher; instructor", "The lecturer gave homework."),
    ("tok kong", "adjective", "excellent; superb; the best", "The durian tok kong."),
    ("tio", "verb", "to get; to strike; correct; to win", "Tio lottery already!"),
    ("tio beh", "phrase", "absolutely right; correct", "You tio beh, he was wrong."),
    ("pia", "verb", "to work hard; to struggle; to fight for", "Must pia for the exam."),
    ("chiong sua", "verb", "to charge uphill; to work very hard", "Last week before deadline, chiong sua."),
    ("tekan sampai", "phrase", "bullied severely; pushed to the limit", "Kena tekan sampai cannot take it."),
    ("whack", "verb", "to eat heartily; to hit; to go for it", "Let's whack some satay."),
    ("ownself", "pronoun", "by yourself; on one's own; oneself", "Ownself check ownself."),
    ("zhun", "adjective", "accurate; precise; on target", "Your guess very zhun."),
    ("cheong hei", "adjective", "long-winded; verbose; lengthy", "His speech so cheong hei."),
    ("lim kopi", "phrase", "to drink coffee; to be called in for a talk", "Let's go lim kopi."),
    ("relak", "verb", "to relax; calm down; chill", "Relak, no need to rush."),
    ("relak one corner", "phrase", "relax; take it easy; no stress", "Don't worry, relak one corner."),
    ("kong simi", "phrase", "what are you saying", "You kong simi?"),
    ("ang pow", "noun", "red packet; gift money", "Got ang pow for New Year."),
    ("sinseh", "noun", "traditional doctor; teacher", "Go see the sinseh for your back."),
    ("towkay", "noun", "boss; business owner; employer", "The towkay gave bonus."),
    ("mata", "noun", "police; cop", "Mata coming, drive properly."),
    ("kacang puteh", "noun", "peanuts; something trivial; small matter", "This task kacang puteh for him."),
    ("photostat", "verb", "to photocopy", "Photostat this page for me."),
    ("blanjah", "verb", "to treat; to pay for someone", "Today I blanjah you lunch."),
    ("belanja", "verb", "to give a treat; to pay for others", "Who belanja today?"),
    ("kacau", "verb", "to disturb; to bother; to annoy", "Stop kacau your sister."),
    ("senang", "adjective", "easy; simple; comfortable", "This question very senang."),
    ("susah", "adjective", "difficult; hard; troublesome", "Finding parking very susah."),
    ("ngeh ngeh", "adverb", "stubbornly; insistently", "He ngeh ngeh want to go."),
    ("up lorry", "phrase", "to die; to break down", "My old car up lorry already."),
    ("bak chor mee", "noun", "minced meat noodles", "Breakfast is bak chor mee."),
    ("chiak", "verb", "to eat; to consume", "Chiak already?"),
    ("yaya papaya", "phrase", "arrogant; showing off; boastful", "He won once, now so yaya papaya."),
    ("shake leg", "phrase", "to idle; to relax and do nothing", "Weekend just shake leg at home."),
    ("can", "verb", "yes; okay; it is possible; agreed", "Can, I will settle it."),
]

# The shipped lexicon is the resource the indexing and rewriting commands load.
assert len(ENTRIES) == 198, len(ENTRIES)
words = [e[0].lower() for e in ENTRIES]
assert len(set(words)) == len(words), [w for w in words if words.count(w) > 1]


def record(word, label, meaning, example):
    r = {"word": word, "meaning": meaning, "example": example}
    if label is not None:
        r["label"] = label
    return r


def write(path, entries):
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        for e in entries:
            f.write(json.dumps(record(*e), ensure_ascii=False) + "\n")


write(ROOT / "data/lexicon/singlish.jsonl", ENTRIES)
mini = [e for e in ENTRIES if e[0] in ("sian", "shiok", "kiasu")]
write(ROOT / "tests/data/lexicon_mini.jsonl", mini)
