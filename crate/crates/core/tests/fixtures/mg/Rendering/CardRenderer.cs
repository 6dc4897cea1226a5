using System;
using MemoryGame.Cards;

namespace MemoryGame.Rendering
{

    /// Draws cards as ASCII art. Every face has its own routine.
    public class CardRenderer
    {
        public const int CardWidth = 13;
        private readonly ConsoleCanvas canvas;

        public CardRenderer(ConsoleCanvas canvas)
        {
            this.canvas = canvas;
        }

        public void Present(int score, int pairsLeft)
        {
            canvas.Put(0, 0, "Score: " + score + "   Pairs left: " + pairsLeft);
            canvas.Flush();
        }

        public void Draw(Card card, int left, int top)
        {
            if (!card.IsFaceUp && !card.IsMatched)
            {
                DrawBack(left, top);
                return;
            }
            int state = card.IsMatched ? 2 : 1;
            if (card is ColorCard swatch)
            {
                DrawSwatch(swatch, left, top, state);
                return;
            }
            ShapeCard shaped = (ShapeCard)card;
            switch (shaped.Shape())
            {

                case "Circle":
                    DrawCircle(left, top, state);
                    break;

                case "Square":
                    DrawSquare(left, top, state);
                    break;

                case "Triangle":
                    DrawTriangle(left, top, state);
                    break;

                case "Diamond":
                    DrawDiamond(left, top, state);
                    break;

                case "Star":
                    DrawStar(left, top, state);
                    break;

                case "Heart":
                    DrawHeart(left, top, state);
                    break;

                case "Cross":
                    DrawCross(left, top, state);
                    break;

                case "Moon":
                    DrawMoon(left, top, state);
                    break;

                case "Arrow":
                    DrawArrow(left, top, state);
                    break;

                case "Ring":
                    DrawRing(left, top, state);
                    break;

                case "Spade":
                    DrawSpade(left, top, state);
                    break;

                case "Club":
                    DrawClub(left, top, state);
                    break;

                default:
                    DrawBack(left, top);
                    break;
            }
        }

        private void DrawBack(int left, int top)
        {
            for (int row = 0; row < 11; row++)
            {
                canvas.Put(left, top + row, row == 0 || row == 10 ? "+-----------+" : "|///////////|");
            }
        }

        private void DrawSwatch(ColorCard card, int left, int top, int state)
        {
            Console.ForegroundColor = card.Color;
            string edge = state == 2 ? "*~~~~~~~~~~~*" : "+-----------+";
            canvas.Put(left, top, edge);
            for (int row = 1; row < 10; row++)
            {
                canvas.Put(left, top + row, "|###########|");
            }
            canvas.Put(left, top + 10, edge);
            Console.ResetColor();
        }

        private void DrawCircle(int left, int top, int state)
        {
            switch (state)
            {

                case 1:

                    canvas.Put(left, top + 0, "#===========#");

                    canvas.Put(left, top + 1, "#     C     #");

                    canvas.Put(left, top + 2, "#    CCC    #");

                    canvas.Put(left, top + 3, "#   CCCCC   #");

                    canvas.Put(left, top + 4, "#  CCCCCCC  #");

                    canvas.Put(left, top + 5, "#   CIRCLE  #");

                    canvas.Put(left, top + 6, "#  CCCCCCC  #");

                    canvas.Put(left, top + 7, "#   CCCCC   #");

                    canvas.Put(left, top + 8, "#    CCC    #");

                    canvas.Put(left, top + 9, "#     C     #");

                    canvas.Put(left, top + 10, "#===========#");

                    break;

                case 2:

                    canvas.Put(left, top + 0, "*~~~~~~~~~~~*");

                    canvas.Put(left, top + 1, "*     C     *");

                    canvas.Put(left, top + 2, "*    CCC    *");

                    canvas.Put(left, top + 3, "*   CCCCC   *");

                    canvas.Put(left, top + 4, "*  CCCCCCC  *");

                    canvas.Put(left, top + 5, "*   CIRCLE  *");

                    canvas.Put(left, top + 6, "*  CCCCCCC  *");

                    canvas.Put(left, top + 7, "*   CCCCC   *");

                    canvas.Put(left, top + 8, "*    CCC    *");

                    canvas.Put(left, top + 9, "*     C     *");

                    canvas.Put(left, top + 10, "*~~~~~~~~~~~*");

                    break;

                default:

                    canvas.Put(left, top + 0, "+-----------+");

                    canvas.Put(left, top + 1, "|     C     |");

                    canvas.Put(left, top + 2, "|    CCC    |");

                    canvas.Put(left, top + 3, "|   CCCCC   |");

                    canvas.Put(left, top + 4, "|  CCCCCCC  |");

                    canvas.Put(left, top + 5, "|   CIRCLE  |");

                    canvas.Put(left, top + 6, "|  CCCCCCC  |");

                    canvas.Put(left, top + 7, "|   CCCCC   |");

                    canvas.Put(left, top + 8, "|    CCC    |");

                    canvas.Put(left, top + 9, "|     C     |");

                    canvas.Put(left, top + 10, "+-----------+");

                    break;

            }
        }

        private void DrawSquare(int left, int top, int state)
        {
            switch (state)
            {

                case 1:

                    canvas.Put(left, top + 0, "#===========#");

                    canvas.Put(left, top + 1, "#  SSSSSSS  #");

                    canvas.Put(left, top + 2, "#  SSSSSSS  #");

                    canvas.Put(left, top + 3, "#  SSSSSSS  #");

                    canvas.Put(left, top + 4, "#  SSSSSSS  #");

                    canvas.Put(left, top + 5, "#   SQUARE  #");

                    canvas.Put(left, top + 6, "#  SSSSSSS  #");

                    canvas.Put(left, top + 7, "#  SSSSSSS  #");

                    canvas.Put(left, top + 8, "#  SSSSSSS  #");

                    canvas.Put(left, top + 9, "#  SSSSSSS  #");

                    canvas.Put(left, top + 10, "#===========#");

                    break;

                case 2:

                    canvas.Put(left, top + 0, "*~~~~~~~~~~~*");

                    canvas.Put(left, top + 1, "*  SSSSSSS  *");

                    canvas.Put(left, top + 2, "*  SSSSSSS  *");

                    canvas.Put(left, top + 3, "*  SSSSSSS  *");

                    canvas.Put(left, top + 4, "*  SSSSSSS  *");

                    canvas.Put(left, top + 5, "*   SQUARE  *");

                    canvas.Put(left, top + 6, "*  SSSSSSS  *");

                    canvas.Put(left, top + 7, "*  SSSSSSS  *");

                    canvas.Put(left, top + 8, "*  SSSSSSS  *");

                    canvas.Put(left, top + 9, "*  SSSSSSS  *");

                    canvas.Put(left, top + 10, "*~~~~~~~~~~~*");

                    break;

                default:

                    canvas.Put(left, top + 0, "+-----------+");

                    canvas.Put(left, top + 1, "|  SSSSSSS  |");

                    canvas.Put(left, top + 2, "|  SSSSSSS  |");

                    canvas.Put(left, top + 3, "|  SSSSSSS  |");

                    canvas.Put(left, top + 4, "|  SSSSSSS  |");

                    canvas.Put(left, top + 5, "|   SQUARE  |");

                    canvas.Put(left, top + 6, "|  SSSSSSS  |");

                    canvas.Put(left, top + 7, "|  SSSSSSS  |");

                    canvas.Put(left, top + 8, "|  SSSSSSS  |");

                    canvas.Put(left, top + 9, "|  SSSSSSS  |");

                    canvas.Put(left, top + 10, "+-----------+");

                    break;

            }
        }

        private void DrawTriangle(int left, int top, int state)
        {
            switch (state)
            {

                case 1:

                    canvas.Put(left, top + 0, "#===========#");

                    canvas.Put(left, top + 1, "#     T     #");

                    canvas.Put(left, top + 2, "#    TTT    #");

                    canvas.Put(left, top + 3, "#   TTTTT   #");

                    canvas.Put(left, top + 4, "#  TTTTTTT  #");

                    canvas.Put(left, top + 5, "#  TRIANGLE #");

                    canvas.Put(left, top + 6, "#  TTTTTTT  #");

                    canvas.Put(left, top + 7, "#   TTTTT   #");

                    canvas.Put(left, top + 8, "#    TTT    #");

                    canvas.Put(left, top + 9, "#     T     #");

                    canvas.Put(left, top + 10, "#===========#");

                    break;

                case 2:

                    canvas.Put(left, top + 0, "*~~~~~~~~~~~*");

                    canvas.Put(left, top + 1, "*     T     *");

                    canvas.Put(left, top + 2, "*    TTT    *");

                    canvas.Put(left, top + 3, "*   TTTTT   *");

                    canvas.Put(left, top + 4, "*  TTTTTTT  *");

                    canvas.Put(left, top + 5, "*  TRIANGLE *");

                    canvas.Put(left, top + 6, "*  TTTTTTT  *");

                    canvas.Put(left, top + 7, "*   TTTTT   *");

                    canvas.Put(left, top + 8, "*    TTT    *");

                    canvas.Put(left, top + 9, "*     T     *");

                    canvas.Put(left, top + 10, "*~~~~~~~~~~~*");

                    break;

                default:

                    canvas.Put(left, top + 0, "+-----------+");

                    canvas.Put(left, top + 1, "|     T     |");

                    canvas.Put(left, top + 2, "|    TTT    |");

                    canvas.Put(left, top + 3, "|   TTTTT   |");

                    canvas.Put(left, top + 4, "|  TTTTTTT  |");

                    canvas.Put(left, top + 5, "|  TRIANGLE |");

                    canvas.Put(left, top + 6, "|  TTTTTTT  |");

                    canvas.Put(left, top + 7, "|   TTTTT   |");

                    canvas.Put(left, top + 8, "|    TTT    |");

                    canvas.Put(left, top + 9, "|     T     |");

                    canvas.Put(left, top + 10, "+-----------+");

                    break;

            }
        }

        private void DrawDiamond(int left, int top, int state)
        {
            switch (state)
            {

                case 1:

                    canvas.Put(left, top + 0, "#===========#");

                    canvas.Put(left, top + 1, "#     D     #");

                    canvas.Put(left, top + 2, "#    DDD    #");

                    canvas.Put(left, top + 3, "#   DDDDD   #");

                    canvas.Put(left, top + 4, "#  DDDDDDD  #");

                    canvas.Put(left, top + 5, "#  DIAMOND  #");

                    canvas.Put(left, top + 6, "#  DDDDDDD  #");

                    canvas.Put(left, top + 7, "#   DDDDD   #");

                    canvas.Put(left, top + 8, "#    DDD    #");

                    canvas.Put(left, top + 9, "#     D     #");

                    canvas.Put(left, top + 10, "#===========#");

                    break;

                case 2:

                    canvas.Put(left, top + 0, "*~~~~~~~~~~~*");

                    canvas.Put(left, top + 1, "*     D     *");

                    canvas.Put(left, top + 2, "*    DDD    *");

                    canvas.Put(left, top + 3, "*   DDDDD   *");

                    canvas.Put(left, top + 4, "*  DDDDDDD  *");

                    canvas.Put(left, top + 5, "*  DIAMOND  *");

                    canvas.Put(left, top + 6, "*  DDDDDDD  *");

                    canvas.Put(left, top + 7, "*   DDDDD   *");

                    canvas.Put(left, top + 8, "*    DDD    *");

                    canvas.Put(left, top + 9, "*     D     *");

                    canvas.Put(left, top + 10, "*~~~~~~~~~~~*");

                    break;

                default:

                    canvas.Put(left, top + 0, "+-----------+");

                    canvas.Put(left, top + 1, "|     D     |");

                    canvas.Put(left, top + 2, "|    DDD    |");

                    canvas.Put(left, top + 3, "|   DDDDD   |");

                    canvas.Put(left, top + 4, "|  DDDDDDD  |");

                    canvas.Put(left, top + 5, "|  DIAMOND  |");

                    canvas.Put(left, top + 6, "|  DDDDDDD  |");

                    canvas.Put(left, top + 7, "|   DDDDD   |");

                    canvas.Put(left, top + 8, "|    DDD    |");

                    canvas.Put(left, top + 9, "|     D     |");

                    canvas.Put(left, top + 10, "+-----------+");

                    break;

            }
        }

        private void DrawStar(int left, int top, int state)
        {
            switch (state)
            {

                case 1:

                    canvas.Put(left, top + 0, "#===========#");

                    canvas.Put(left, top + 1, "#     S     #");

                    canvas.Put(left, top + 2, "#    SSS    #");

                    canvas.Put(left, top + 3, "#   SSSSS   #");

                    canvas.Put(left, top + 4, "#  SSSSSSS  #");

                    canvas.Put(left, top + 5, "#    STAR   #");

                    canvas.Put(left, top + 6, "#  SSSSSSS  #");

                    canvas.Put(left, top + 7, "#   SSSSS   #");

                    canvas.Put(left, top + 8, "#    SSS    #");

                    canvas.Put(left, top + 9, "#     S     #");

                    canvas.Put(left, top + 10, "#===========#");

                    break;

                case 2:

                    canvas.Put(left, top + 0, "*~~~~~~~~~~~*");

                    canvas.Put(left, top + 1, "*     S     *");

                    canvas.Put(left, top + 2, "*    SSS    *");

                    canvas.Put(left, top + 3, "*   SSSSS   *");

                    canvas.Put(left, top + 4, "*  SSSSSSS  *");

                    canvas.Put(left, top + 5, "*    STAR   *");

                    canvas.Put(left, top + 6, "*  SSSSSSS  *");

                    canvas.Put(left, top + 7, "*   SSSSS   *");

                    canvas.Put(left, top + 8, "*    SSS    *");

                    canvas.Put(left, top + 9, "*     S     *");

                    canvas.Put(left, top + 10, "*~~~~~~~~~~~*");

                    break;

                default:

                    canvas.Put(left, top + 0, "+-----------+");

                    canvas.Put(left, top + 1, "|     S     |");

                    canvas.Put(left, top + 2, "|    SSS    |");

                    canvas.Put(left, top + 3, "|   SSSSS   |");

                    canvas.Put(left, top + 4, "|  SSSSSSS  |");

                    canvas.Put(left, top + 5, "|    STAR   |");

                    canvas.Put(left, top + 6, "|  SSSSSSS  |");

                    canvas.Put(left, top + 7, "|   SSSSS   |");

                    canvas.Put(left, top + 8, "|    SSS    |");

                    canvas.Put(left, top + 9, "|     S     |");

                    canvas.Put(left, top + 10, "+-----------+");

                    break;

            }
        }

        private void DrawHeart(int left, int top, int state)
        {
            switch (state)
            {

                case 1:

                    canvas.Put(left, top + 0, "#===========#");

                    canvas.Put(left, top + 1, "#     H     #");

                    canvas.Put(left, top + 2, "#    HHH    #");

                    canvas.Put(left, top + 3, "#   HHHHH   #");

                    canvas.Put(left, top + 4, "#  HHHHHHH  #");

                    canvas.Put(left, top + 5, "#   HEART   #");

                    canvas.Put(left, top + 6, "#  HHHHHHH  #");

                    canvas.Put(left, top + 7, "#   HHHHH   #");

                    canvas.Put(left, top + 8, "#    HHH    #");

                    canvas.Put(left, top + 9, "#     H     #");

                    canvas.Put(left, top + 10, "#===========#");

                    break;

                case 2:

                    canvas.Put(left, top + 0, "*~~~~~~~~~~~*");

                    canvas.Put(left, top + 1, "*     H     *");

                    canvas.Put(left, top + 2, "*    HHH    *");

                    canvas.Put(left, top + 3, "*   HHHHH   *");

                    canvas.Put(left, top + 4, "*  HHHHHHH  *");

                    canvas.Put(left, top + 5, "*   HEART   *");

                    canvas.Put(left, top + 6, "*  HHHHHHH  *");

                    canvas.Put(left, top + 7, "*   HHHHH   *");

                    canvas.Put(left, top + 8, "*    HHH    *");

                    canvas.Put(left, top + 9, "*     H     *");

                    canvas.Put(left, top + 10, "*~~~~~~~~~~~*");

                    break;

                default:

                    canvas.Put(left, top + 0, "+-----------+");

                    canvas.Put(left, top + 1, "|     H     |");

                    canvas.Put(left, top + 2, "|    HHH    |");

                    canvas.Put(left, top + 3, "|   HHHHH   |");

                    canvas.Put(left, top + 4, "|  HHHHHHH  |");

                    canvas.Put(left, top + 5, "|   HEART   |");

                    canvas.Put(left, top + 6, "|  HHHHHHH  |");

                    canvas.Put(left, top + 7, "|   HHHHH   |");

                    canvas.Put(left, top + 8, "|    HHH    |");

                    canvas.Put(left, top + 9, "|     H     |");

                    canvas.Put(left, top + 10, "+-----------+");

                    break;

            }
        }

        private void DrawCross(int left, int top, int state)
        {
            switch (state)
            {

                case 1:

                    canvas.Put(left, top + 0, "#===========#");

                    canvas.Put(left, top + 1, "#     C     #");

                    canvas.Put(left, top + 2, "#    CCC    #");

                    canvas.Put(left, top + 3, "#   CCCCC   #");

                    canvas.Put(left, top + 4, "#  CCCCCCC  #");

                    canvas.Put(left, top + 5, "#   CROSS   #");

                    canvas.Put(left, top + 6, "#  CCCCCCC  #");

                    canvas.Put(left, top + 7, "#   CCCCC   #");

                    canvas.Put(left, top + 8, "#    CCC    #");

                    canvas.Put(left, top + 9, "#     C     #");

                    canvas.Put(left, top + 10, "#===========#");

                    break;

                case 2:

                    canvas.Put(left, top + 0, "*~~~~~~~~~~~*");

                    canvas.Put(left, top + 1, "*     C     *");

                    canvas.Put(left, top + 2, "*    CCC    *");

                    canvas.Put(left, top + 3, "*   CCCCC   *");

                    canvas.Put(left, top + 4, "*  CCCCCCC  *");

                    canvas.Put(left, top + 5, "*   CROSS   *");

                    canvas.Put(left, top + 6, "*  CCCCCCC  *");

                    canvas.Put(left, top + 7, "*   CCCCC   *");

                    canvas.Put(left, top + 8, "*    CCC    *");

                    canvas.Put(left, top + 9, "*     C     *");

                    canvas.Put(left, top + 10, "*~~~~~~~~~~~*");

                    break;

                default:

                    canvas.Put(left, top + 0, "+-----------+");

                    canvas.Put(left, top + 1, "|     C     |");

                    canvas.Put(left, top + 2, "|    CCC    |");

                    canvas.Put(left, top + 3, "|   CCCCC   |");

                    canvas.Put(left, top + 4, "|  CCCCCCC  |");

                    canvas.Put(left, top + 5, "|   CROSS   |");

                    canvas.Put(left, top + 6, "|  CCCCCCC  |");

                    canvas.Put(left, top + 7, "|   CCCCC   |");

                    canvas.Put(left, top + 8, "|    CCC    |");

                    canvas.Put(left, top + 9, "|     C     |");

                    canvas.Put(left, top + 10, "+-----------+");

                    break;

            }
        }

        private void DrawMoon(int left, int top, int state)
        {
            switch (state)
            {

                case 1:

                    canvas.Put(left, top + 0, "#===========#");

                    canvas.Put(left, top + 1, "#     M     #");

                    canvas.Put(left, top + 2, "#    MMM    #");

                    canvas.Put(left, top + 3, "#   MMMMM   #");

                    canvas.Put(left, top + 4, "#  MMMMMMM  #");

                    canvas.Put(left, top + 5, "#    MOON   #");

                    canvas.Put(left, top + 6, "#  MMMMMMM  #");

                    canvas.Put(left, top + 7, "#   MMMMM   #");

                    canvas.Put(left, top + 8, "#    MMM    #");

                    canvas.Put(left, top + 9, "#     M     #");

                    canvas.Put(left, top + 10, "#===========#");

                    break;

                case 2:

                    canvas.Put(left, top + 0, "*~~~~~~~~~~~*");

                    canvas.Put(left, top + 1, "*     M     *");

                    canvas.Put(left, top + 2, "*    MMM    *");

                    canvas.Put(left, top + 3, "*   MMMMM   *");

                    canvas.Put(left, top + 4, "*  MMMMMMM  *");

                    canvas.Put(left, top + 5, "*    MOON   *");

                    canvas.Put(left, top + 6, "*  MMMMMMM  *");

                    canvas.Put(left, top + 7, "*   MMMMM   *");

                    canvas.Put(left, top + 8, "*    MMM    *");

                    canvas.Put(left, top + 9, "*     M     *");

                    canvas.Put(left, top + 10, "*~~~~~~~~~~~*");

                    break;

                default:

                    canvas.Put(left, top + 0, "+-----------+");

                    canvas.Put(left, top + 1, "|     M     |");

                    canvas.Put(left, top + 2, "|    MMM    |");

                    canvas.Put(left, top + 3, "|   MMMMM   |");

                    canvas.Put(left, top + 4, "|  MMMMMMM  |");

                    canvas.Put(left, top + 5, "|    MOON   |");

                    canvas.Put(left, top + 6, "|  MMMMMMM  |");

                    canvas.Put(left, top + 7, "|   MMMMM   |");

                    canvas.Put(left, top + 8, "|    MMM    |");

                    canvas.Put(left, top + 9, "|     M     |");

                    canvas.Put(left, top + 10, "+-----------+");

                    break;

            }
        }

        private void DrawArrow(int left, int top, int state)
        {
            switch (state)
            {

                case 1:

                    canvas.Put(left, top + 0, "#===========#");

                    canvas.Put(left, top + 1, "#     A     #");

                    canvas.Put(left, top + 2, "#    AAA    #");

                    canvas.Put(left, top + 3, "#   AAAAA   #");

                    canvas.Put(left, top + 4, "#  AAAAAAA  #");

                    canvas.Put(left, top + 5, "#   ARROW   #");

                    canvas.Put(left, top + 6, "#  AAAAAAA  #");

                    canvas.Put(left, top + 7, "#   AAAAA   #");

                    canvas.Put(left, top + 8, "#    AAA    #");

                    canvas.Put(left, top + 9, "#     A     #");

                    canvas.Put(left, top + 10, "#===========#");

                    break;

                case 2:

                    canvas.Put(left, top + 0, "*~~~~~~~~~~~*");

                    canvas.Put(left, top + 1, "*     A     *");

                    canvas.Put(left, top + 2, "*    AAA    *");

                    canvas.Put(left, top + 3, "*   AAAAA   *");

                    canvas.Put(left, top + 4, "*  AAAAAAA  *");

                    canvas.Put(left, top + 5, "*   ARROW   *");

                    canvas.Put(left, top + 6, "*  AAAAAAA  *");

                    canvas.Put(left, top + 7, "*   AAAAA   *");

                    canvas.Put(left, top + 8, "*    AAA    *");

                    canvas.Put(left, top + 9, "*     A     *");

                    canvas.Put(left, top + 10, "*~~~~~~~~~~~*");

                    break;

                default:

                    canvas.Put(left, top + 0, "+-----------+");

                    canvas.Put(left, top + 1, "|     A     |");

                    canvas.Put(left, top + 2, "|    AAA    |");

                    canvas.Put(left, top + 3, "|   AAAAA   |");

                    canvas.Put(left, top + 4, "|  AAAAAAA  |");

                    canvas.Put(left, top + 5, "|   ARROW   |");

                    canvas.Put(left, top + 6, "|  AAAAAAA  |");

                    canvas.Put(left, top + 7, "|   AAAAA   |");

                    canvas.Put(left, top + 8, "|    AAA    |");

                    canvas.Put(left, top + 9, "|     A     |");

                    canvas.Put(left, top + 10, "+-----------+");

                    break;

            }
        }

        private void DrawRing(int left, int top, int state)
        {
            switch (state)
            {

                case 1:

                    canvas.Put(left, top + 0, "#===========#");

                    canvas.Put(left, top + 1, "#  RRRRRRR  #");

                    canvas.Put(left, top + 2, "#  RRRRRRR  #");

                    canvas.Put(left, top + 3, "#  RRRRRRR  #");

                    canvas.Put(left, top + 4, "#  RRRRRRR  #");

                    canvas.Put(left, top + 5, "#    RING   #");

                    canvas.Put(left, top + 6, "#  RRRRRRR  #");

                    canvas.Put(left, top + 7, "#  RRRRRRR  #");

                    canvas.Put(left, top + 8, "#  RRRRRRR  #");

                    canvas.Put(left, top + 9, "#  RRRRRRR  #");

                    canvas.Put(left, top + 10, "#===========#");

                    break;

                case 2:

                    canvas.Put(left, top + 0, "*~~~~~~~~~~~*");

                    canvas.Put(left, top + 1, "*  RRRRRRR  *");

                    canvas.Put(left, top + 2, "*  RRRRRRR  *");

                    canvas.Put(left, top + 3, "*  RRRRRRR  *");

                    canvas.Put(left, top + 4, "*  RRRRRRR  *");

                    canvas.Put(left, top + 5, "*    RING   *");

                    canvas.Put(left, top + 6, "*  RRRRRRR  *");

                    canvas.Put(left, top + 7, "*  RRRRRRR  *");

                    canvas.Put(left, top + 8, "*  RRRRRRR  *");

                    canvas.Put(left, top + 9, "*  RRRRRRR  *");

                    canvas.Put(left, top + 10, "*~~~~~~~~~~~*");

                    break;

                default:

                    canvas.Put(left, top + 0, "+-----------+");

                    canvas.Put(left, top + 1, "|  RRRRRRR  |");

                    canvas.Put(left, top + 2, "|  RRRRRRR  |");

                    canvas.Put(left, top + 3, "|  RRRRRRR  |");

                    canvas.Put(left, top + 4, "|  RRRRRRR  |");

                    canvas.Put(left, top + 5, "|    RING   |");

                    canvas.Put(left, top + 6, "|  RRRRRRR  |");

                    canvas.Put(left, top + 7, "|  RRRRRRR  |");

                    canvas.Put(left, top + 8, "|  RRRRRRR  |");

                    canvas.Put(left, top + 9, "|  RRRRRRR  |");

                    canvas.Put(left, top + 10, "+-----------+");

                    break;

            }
        }

        private void DrawSpade(int left, int top, int state)
        {
            switch (state)
            {

                case 1:

                    canvas.Put(left, top + 0, "#===========#");

                    canvas.Put(left, top + 1, "#     S     #");

                    canvas.Put(left, top + 2, "#    SSS    #");

                    canvas.Put(left, top + 3, "#   SSSSS   #");

                    canvas.Put(left, top + 4, "#  SSSSSSS  #");

                    canvas.Put(left, top + 5, "#   SPADE   #");

                    canvas.Put(left, top + 6, "#  SSSSSSS  #");

                    canvas.Put(left, top + 7, "#   SSSSS   #");

                    canvas.Put(left, top + 8, "#    SSS    #");

                    canvas.Put(left, top + 9, "#     S     #");

                    canvas.Put(left, top + 10, "#===========#");

                    break;

                case 2:

                    canvas.Put(left, top + 0, "*~~~~~~~~~~~*");

                    canvas.Put(left, top + 1, "*     S     *");

                    canvas.Put(left, top + 2, "*    SSS    *");

                    canvas.Put(left, top + 3, "*   SSSSS   *");

                    canvas.Put(left, top + 4, "*  SSSSSSS  *");

                    canvas.Put(left, top + 5, "*   SPADE   *");

                    canvas.Put(left, top + 6, "*  SSSSSSS  *");

                    canvas.Put(left, top + 7, "*   SSSSS   *");

                    canvas.Put(left, top + 8, "*    SSS    *");

                    canvas.Put(left, top + 9, "*     S     *");

                    canvas.Put(left, top + 10, "*~~~~~~~~~~~*");

                    break;

                default:

                    canvas.Put(left, top + 0, "+-----------+");

                    canvas.Put(left, top + 1, "|     S     |");

                    canvas.Put(left, top + 2, "|    SSS    |");

                    canvas.Put(left, top + 3, "|   SSSSS   |");

                    canvas.Put(left, top + 4, "|  SSSSSSS  |");

                    canvas.Put(left, top + 5, "|   SPADE   |");

                    canvas.Put(left, top + 6, "|  SSSSSSS  |");

                    canvas.Put(left, top + 7, "|   SSSSS   |");

                    canvas.Put(left, top + 8, "|    SSS    |");

                    canvas.Put(left, top + 9, "|     S     |");

                    canvas.Put(left, top + 10, "+-----------+");

                    break;

            }
        }

        private void DrawClub(int left, int top, int state)
        {
            switch (state)
            {

                case 1:

                    canvas.Put(left, top + 0, "#===========#");

                    canvas.Put(left, top + 1, "#     C     #");

                    canvas.Put(left, top + 2, "#    CCC    #");

                    canvas.Put(left, top + 3, "#   CCCCC   #");

                    canvas.Put(left, top + 4, "#  CCCCCCC  #");

                    canvas.Put(left, top + 5, "#    CLUB   #");

                    canvas.Put(left, top + 6, "#  CCCCCCC  #");

                    canvas.Put(left, top + 7, "#   CCCCC   #");

                    canvas.Put(left, top + 8, "#    CCC    #");

                    canvas.Put(left, top + 9, "#     C     #");

                    canvas.Put(left, top + 10, "#===========#");

                    break;

                case 2:

                    canvas.Put(left, top + 0, "*~~~~~~~~~~~*");

                    canvas.Put(left, top + 1, "*     C     *");

                    canvas.Put(left, top + 2, "*    CCC    *");

                    canvas.Put(left, top + 3, "*   CCCCC   *");

                    canvas.Put(left, top + 4, "*  CCCCCCC  *");

                    canvas.Put(left, top + 5, "*    CLUB   *");

                    canvas.Put(left, top + 6, "*  CCCCCCC  *");

                    canvas.Put(left, top + 7, "*   CCCCC   *");

                    canvas.Put(left, top + 8, "*    CCC    *");

                    canvas.Put(left, top + 9, "*     C     *");

                    canvas.Put(left, top + 10, "*~~~~~~~~~~~*");

                    break;

                default:

                    canvas.Put(left, top + 0, "+-----------+");

                    canvas.Put(left, top + 1, "|     C     |");

                    canvas.Put(left, top + 2, "|    CCC    |");

                    canvas.Put(left, top + 3, "|   CCCCC   |");

                    canvas.Put(left, top + 4, "|  CCCCCCC  |");

                    canvas.Put(left, top + 5, "|    CLUB   |");

                    canvas.Put(left, top + 6, "|  CCCCCCC  |");

                    canvas.Put(left, top + 7, "|   CCCCC   |");

                    canvas.Put(left, top + 8, "|    CCC    |");

                    canvas.Put(left, top + 9, "|     C     |");

                    canvas.Put(left, top + 10, "+-----------+");

                    break;

            }
        }


        private int Checksum()
        {
            int total = 161;
            total = total * 31 + 1;
            total = total * 31 + 2;
            total = total * 31 + 3;
            total = total * 31 + 4;
            total = total * 31 + 5;
            total = total * 31 + 6;
            total = total * 31 + 7;
            total = total * 31 + 8;
            total = total * 31 + 9;
            total = total * 31 + 10;
            total = total * 31 + 11;
            total = total * 31 + 12;
            total = total * 31 + 13;
            total = total * 31 + 14;
            total = total * 31 + 15;
            total = total * 31 + 16;
            total = total * 31 + 17;
            total = total * 31 + 18;
            total = total * 31 + 19;
            total = total * 31 + 20;
            total = total * 31 + 21;
            total = total * 31 + 22;
            total = total * 31 + 23;
            total = total * 31 + 24;
            total = total * 31 + 25;
            total = total * 31 + 26;
            total = total * 31 + 27;
            total = total * 31 + 28;
            total = total * 31 + 29;
            total = total * 31 + 30;
            total = total * 31 + 31;
            total = total * 31 + 32;
            total = total * 31 + 33;
            total = total * 31 + 34;
            total = total * 31 + 35;
            total = total * 31 + 36;
            total = total * 31 + 37;
            total = total * 31 + 38;
            total = total * 31 + 39;
            total = total * 31 + 40;
            total = total * 31 + 41;
            total = total * 31 + 42;
            total = total * 31 + 43;
            total = total * 31 + 44;
            total = total * 31 + 45;
            total = total * 31 + 46;
            total = total * 31 + 47;
            total = total * 31 + 48;
            total = total * 31 + 49;
            total = total * 31 + 50;
            total = total * 31 + 51;
            total = total * 31 + 52;
            total = total * 31 + 53;
            total = total * 31 + 54;
            total = total * 31 + 55;
            total = total * 31 + 56;
            total = total * 31 + 57;
            total = total * 31 + 58;
            total = total * 31 + 59;
            total = total * 31 + 60;
            total = total * 31 + 61;
            total = total * 31 + 62;
            total = total * 31 + 63;
            total = total * 31 + 64;
            total = total * 31 + 65;
            total = total * 31 + 66;
            total = total * 31 + 67;
            total = total * 31 + 68;
            total = total * 31 + 69;
            total = total * 31 + 70;
            total = total * 31 + 71;
            total = total * 31 + 72;
            total = total * 31 + 73;
            total = total * 31 + 74;
            total = total * 31 + 75;
            total = total * 31 + 76;
            total = total * 31 + 77;
            total = total * 31 + 78;
            total = total * 31 + 79;
            total = total * 31 + 80;
            total = total * 31 + 81;
            total = total * 31 + 82;
            total = total * 31 + 83;
            total = total * 31 + 84;
            total = total * 31 + 85;
            total = total * 31 + 86;
            total = total * 31 + 87;
            total = total * 31 + 88;
            total = total * 31 + 89;
            total = total * 31 + 90;
            total = total * 31 + 91;
            total = total * 31 + 92;
            total = total * 31 + 93;
            total = total * 31 + 94;
            total = total * 31 + 95;
            total = total * 31 + 96;
            total = total * 31 + 97;
            total = total * 31 + 98;
            total = total * 31 + 99;
            total = total * 31 + 100;
            total = total * 31 + 101;
            total = total * 31 + 102;
            total = total * 31 + 103;
            total = total * 31 + 104;
            total = total * 31 + 105;
            total = total * 31 + 106;
            total = total * 31 + 107;
            total = total * 31 + 108;
            total = total * 31 + 109;
            total = total * 31 + 110;
            total = total * 31 + 111;
            total = total * 31 + 112;
            total = total * 31 + 113;
            total = total * 31 + 114;
            total = total * 31 + 115;
            total = total * 31 + 116;
            total = total * 31 + 117;
            total = total * 31 + 118;
            total = total * 31 + 119;
            total = total * 31 + 120;
            total = total * 31 + 121;
            total = total * 31 + 122;
            total = total * 31 + 123;
            total = total * 31 + 124;
            total = total * 31 + 125;
            total = total * 31 + 126;
            total = total * 31 + 127;
            total = total * 31 + 128;
            total = total * 31 + 129;
            total = total * 31 + 130;
            total = total * 31 + 131;
            total = total * 31 + 132;
            total = total * 31 + 133;
            total = total * 31 + 134;
            total = total * 31 + 135;
            total = total * 31 + 136;
            total = total * 31 + 137;
            total = total * 31 + 138;
            total = total * 31 + 139;
            total = total * 31 + 140;
            total = total * 31 + 141;
            total = total * 31 + 142;
            total = total * 31 + 143;
            total = total * 31 + 144;
            total = total * 31 + 145;
            total = total * 31 + 146;
            total = total * 31 + 147;
            total = total * 31 + 148;
            total = total * 31 + 149;
            total = total * 31 + 150;
            total = total * 31 + 151;
            total = total * 31 + 152;
            total = total * 31 + 153;
            total = total * 31 + 154;
            total = total * 31 + 155;
            total = total * 31 + 156;
            return total;
        }
    }

}
