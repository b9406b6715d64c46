"""Writes corpus50.jsonl and scripted_chat.json for the regime-contrast and CLI tests."""
import json
import pathlib

HERE = pathlib.Path(__file__).resolve().parent

# (user message, Standard English reply)
ITEMS = [
    ("I had meetings all day.", "Hi there, that sounds really exhausting. Back-to-back meetings can wear anyone down, and it's understandable to feel overwhelmed."),
    ("Any lunch ideas near the office?", "The chicken rice stall near the station is delicious and cheap. If you want something lighter, the salad bar next door is also a good choice."),
    ("My colleague keeps taking credit for my work.", "That is really frustrating to deal with. Try keeping written records of your contributions so your manager can see them clearly."),
    ("I missed the bus again this morning.", "That is unlucky, especially when you are already rushing. Leaving five minutes earlier might give you a little more buffer."),
    ("Should I queue for the new bubble tea shop?", "The queue will probably be long for the first few weeks. If you are patient, it could be worth trying once the crowd settles."),
    ("I am nervous about my presentation tomorrow.", "It is normal to feel anxious before presenting. Practise the opening twice tonight and get some proper sleep."),
    ("My neighbour is always asking about my salary.", "Some people are simply nosy about money. You can politely change the topic and keep your answers vague."),
    ("What should I do this weekend?", "You could relax at the beach or visit the night market. Both are easy plans that do not need much preparation."),
    ("My laptop stopped working.", "That sounds stressful if you need it for work. Try restarting it while holding the power button for ten seconds."),
    ("The weather is so hot today.", "The heat has been unbearable this week. Drink plenty of water and stay indoors during the afternoon."),
    ("I finally passed my driving test!", "Congratulations, that is a great achievement. All those practice sessions clearly paid off."),
    ("My friend went to dinner without inviting me.", "It hurts to feel left out by a friend. You could tell them honestly that you would have liked to join."),
    ("I do not understand this maths homework.", "That topic can be confusing at first. Work through one example slowly and write down each step."),
    ("The restaurant we booked is very fancy.", "A posh restaurant can be fun for a special occasion. Check the dress code before you go."),
    ("I reserved a table with a tissue packet.", "That is a very local way to claim a seat. Just make sure you return quickly with your food."),
    ("My boss gave me all the boring tasks.", "Getting the thankless chores again is tiring. Ask your boss whether the work could be shared more evenly."),
    ("I am so tired after the marathon.", "You must be completely exhausted after running that far. Rest well and stretch your legs gently tomorrow."),
    ("My phone is broken again.", "That is really annoying when you depend on it. The repair shop at the mall can usually fix screens within an hour."),
    ("Should I buy the cheaper laptop?", "The cheaper model is fine for browsing and documents. If you edit videos, the faster one is the better choice."),
    ("My grandmother cooked soup for everyone.", "Your grandmother sounds very caring. Home-cooked soup is the best comfort food."),
    ("I forgot my wallet at home.", "Oh no, that is inconvenient. You can use your phone to pay at most shops nowadays."),
    ("The traffic was terrible today.", "The roads have been very congested lately. Taking the train might save you some time tomorrow."),
    ("My team won the football match!", "That is fantastic news. Your team must have trained very hard this season."),
    ("I need to finish this report tonight.", "That is a tight deadline but you can manage it. Focus on the summary first and polish the details later."),
    ("My friend is always showing off his new car.", "Some people enjoy boasting about their purchases. Try not to let it bother you too much."),
    ("Where can I get good coffee?", "The coffee shop downstairs serves strong coffee in the morning. It is cheap and the uncle is friendly."),
    ("I was too scared to try the roller coaster.", "Feeling timid about big rides is completely normal. You could start with a smaller ride and build confidence."),
    ("The lecture today was difficult to follow.", "Some lectures are really complicated. Reviewing the slides with a classmate can help everything make sense."),
    ("I got a bonus this year!", "That is wonderful, you deserve it. Treat yourself to something nice this weekend."),
    ("My brother keeps disturbing me while I study.", "It is hard to concentrate when someone keeps bothering you. Maybe study at the library for a few hours."),
    ("I cannot decide what to eat for dinner.", "Sometimes every option sounds the same. Try the noodle stall since it is quick and filling."),
    ("My colleague pretends not to know about the deadline.", "It is frustrating when someone feigns ignorance. Send a short email reminder so there is a clear record."),
    ("My house is very far from the city.", "Living in a remote area can make commuting long. Podcasts can make the journey more enjoyable."),
    ("I ate too much at the buffet.", "Buffets make it easy to overeat. A short walk after the meal usually helps digestion."),
    ("I think I failed my exam.", "Waiting for results is stressful. Whatever happens, one exam does not define your future."),
    ("My manager watched while I carried all the boxes.", "It is annoying when someone just watches and does not help. You could ask for help directly next time."),
    ("Can you explain this philosophy book?", "That book is quite profound and difficult to understand. Start with a summary before reading each chapter."),
    ("My friend always takes the best seats.", "Some people are very competitive about small things. You could arrive a little earlier next time."),
    ("The party last night was chaotic.", "It sounds like things got messy and out of control. At least everyone had a memorable night."),
    ("I got a parking fine today.", "That is unfortunate and expensive. Setting a phone reminder for the meter could prevent it next time."),
    ("My new shoes are really pretty.", "They sound beautiful. A nice pair of shoes can brighten your whole outfit."),
    ("I want to start running.", "That is a great goal. Begin with short easy runs three times a week."),
    ("My cousin is very good at chess.", "Your cousin sounds impressive. Playing regularly against strong players is the best way to improve."),
    ("I keep making excuses to skip the gym.", "It happens to everyone sometimes. Schedule your workouts like meetings so they are harder to avoid."),
    ("The food at the hawker centre was amazing.", "Hawker food is often amazing value. You should try the laksa stall next time too."),
    ("My sister is upset with me.", "Disagreements with family can be painful. A sincere apology and a calm conversation usually help."),
    ("I am bored at home.", "Being bored at home can make the day feel long. Maybe call a friend or try a new recipe."),
    ("My uncle is retiring next month.", "That is a big milestone. A small celebration with the family would be a thoughtful gesture."),
    ("I was late because the train broke down.", "Train delays are frustrating and out of your control. Your manager will likely understand."),
    ("I want to treat my parents to dinner.", "That is a kind idea. Your parents will appreciate the gesture more than the restaurant itself."),
]

assert len(ITEMS) == 50
with open(HERE / "corpus50.jsonl", "w", encoding="utf-8", newline="\n") as f:
    for i, (user, base) in enumerate(ITEMS, 1):
        f.write(json.dumps({"id": f"c{i:03d}", "user": user, "base": base}, ensure_ascii=False) + "\n")

# Base replies keyed by user text; rewrites substitute the first retrieved cue;
# zero-shot replies paraphrase the base reply.
script = {
    "base": {user: base for user, base in ITEMS},
    "rewrite": {
        "Hi there, that sounds really exhausting. Back-to-back meetings can wear anyone down, and it's understandable to feel overwhelmed.":
        "Hi there, that sounds really sian. Back-to-back meetings can wear anyone down, and it's understandable to feel overwhelmed.",
    },
    "base_fallback": "error",
    "rewrite_fallback": "substitute",
    "zero_shot_fallback": "paraphrase_base",
}
with open(HERE / "scripted_chat.json", "w", encoding="utf-8", newline="\n") as f:
    json.dump(script, f, ensure_ascii=False, indent=2, sort_keys=True)
    f.write("\n")
